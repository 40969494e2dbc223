"""
Command-line interface.

Exit codes: 0 success (and the queried property holds), 1 computation
succeeded but the property fails, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import dihedral, hecke
from .arith import parse_scalar
from .coxeter import (
    DEFAULT_LENGTH_CAP,
    DEFAULT_SIZE_CAP,
    INF,
    CoxeterGraph,
    FiniteCoxeterGroup,
    bruhat_leq,
    enumerate_elements,
    normal_form,
    validate_graph,
    word_str,
)
from .errors import CoxcellError
from .reps import MatrixRep, check_relations, classify_a_value, cwrt_annihilation, fixed_subspace, is_r_rep
from .rrep import RRepSpec, classify, cycle_rep, distinct_holonomies, simple_tree_rep


class UsageError(Exception):
    pass


def _caps(args) -> tuple[int, int]:
    length, size = DEFAULT_LENGTH_CAP, DEFAULT_SIZE_CAP
    env = os.environ.get("COXCELL_CAP")
    if env:
        parts = env.split(",")
        try:
            length = int(parts[0])
            if len(parts) > 1:
                size = int(parts[1])
        except ValueError:
            raise UsageError(f"COXCELL_CAP must be 'LENGTH' or 'LENGTH,SIZE', got {env!r}") from None
    if args.cap is not None:
        length = args.cap
    return length, size


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON: {exc}") from None
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _graph(args) -> CoxeterGraph:
    if not args.graph:
        raise UsageError("--graph is required")
    return validate_graph(_load_json(args.graph))


def _rep(args) -> MatrixRep:
    if not args.rep:
        raise UsageError("--rep is required")
    return MatrixRep.from_json(_load_json(args.rep))


def _group(args) -> FiniteCoxeterGroup:
    length, size = _caps(args)
    return FiniteCoxeterGroup.from_graph(_graph(args), max_length=length, max_size=size)


def _words_map(G: FiniteCoxeterGroup, values) -> dict:
    return {word_str(w.word): values[w] for w in G.elements}


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, exit code)


def cmd_graph_validate(args):
    g = _graph(args)
    out = g.to_json()
    out.update(connected=g.connected, simply_laced=g.simply_laced, cycle_count=g.cycle_count)
    return out, 0


def cmd_enumerate(args):
    g = _graph(args)
    length, size = _caps(args)
    levels = enumerate_elements(g, cap=length)
    total = sum(len(level) for level in levels)
    exhausted = len(levels) <= length
    if args.format == "dot":
        lines = ["digraph bruhat {", "  rankdir=BT;"]
        for level in levels:
            for w in level:
                lines.append(f'  "{w}";')
        for lo, hi in zip(levels, levels[1:]):
            for y in lo:
                for w in hi:
                    if bruhat_leq(y, w):
                        lines.append(f'  "{y}" -> "{w}";')
        lines.append("}")
        return "\n".join(lines) + "\n", 0
    return {
        "levels": [[str(w) for w in level] for level in levels],
        "sizes": [len(level) for level in levels],
        "total": total,
        "exhausted": exhausted,
    }, 0


def cmd_kl(args):
    return hecke.kl_table(_group(args)).to_json(), 0


def cmd_afunction(args):
    G = _group(args)
    h = hecke.h_constants(G)
    a = hecke.a_values(h)
    out = _words_map(G, a)
    if args.with_constants:
        out = {"a": out, "h": h.to_json()["h"]}
    return out, 0


def cmd_cells(args):
    G = _group(args)
    h = hecke.h_constants(G)
    a = hecke.a_values(h)
    cells = hecke.lr_cells(h.table)
    if args.format == "dot":
        return cells.to_dot(a), 0
    out = cells.to_json()
    out["a_values"] = [a[b[0]] for b in cells.blocks]
    return out, 0


def cmd_dihedral_decompose(args):
    rep = _rep(args)
    g = rep.graph
    if g.rank != 2:
        raise UsageError("dihedral-decompose needs a graph with two generators")
    r, t = g.generators
    m = g.m(r, t)
    if m == INF:
        raise UsageError("the dihedral group must be finite")
    mult = dihedral.decompose(rep[r], rep[t], m)
    full = {k: mult.get(k, 0) for k in dihedral.irreducible_kinds(m)}
    return {"m": m, "multiplicities": full}, 0


def cmd_rep_check(args):
    rep = _rep(args)
    bad = check_relations(rep)
    if bad:
        raise UsageError(f"relations fail: {bad}")
    report = classify_a_value(rep)
    out = report.to_json()
    out["cwrt_annihilation"] = cwrt_annihilation(rep)
    out["fixed_dim"] = len(fixed_subspace(rep))
    if rep.graph.simply_laced:
        chk = is_r_rep(rep)
        out["r_rep"] = {"ok": chk.ok, "failed_condition": chk.failed_condition}
    return out, (1 if report.verdict == "greater_than_1" else 0)


def _x(args):
    if args.x is None:
        return None
    if len(args.x) != 1:
        raise UsageError("rrep-build takes a single --x")
    return _parse_x(args.x[0])


def _parse_x(text):
    try:
        return parse_scalar(text)
    except (ValueError, ZeroDivisionError, json.JSONDecodeError, KeyError) as exc:
        raise UsageError(f"cannot parse parameter {text!r}: {exc}") from None


def cmd_rrep_build(args):
    g = _graph(args)
    x = _x(args)
    if g.cycle_count == 0:
        RRepSpec(g, x)
        return simple_tree_rep(g).to_json(), 0
    if x is None:
        raise UsageError("--x is required for a graph with a cycle")
    tilde, quo, _ = cycle_rep(g, x)
    return (tilde if args.tilde else quo).to_json(), 0


def cmd_rrep_classify(args):
    g = _graph(args)
    samples = [_parse_x(s) for s in (args.x or [])]
    entries = classify(g, samples)
    ok = all(e.certified for e in entries) and distinct_holonomies(entries)
    return [e.to_json() for e in entries], (0 if ok else 1)


def cmd_specialize(args):
    G = _group(args)
    if args.word is None:
        raise UsageError("--word is required")
    text = args.word.strip()
    if text.startswith("["):
        letters = json.loads(text)
    elif text in ("", "e"):
        letters = []
    else:
        letters = [s for s in text.split(",") if s]
    w = normal_form(G.graph, letters)
    table = hecke.kl_table(G)
    spec = hecke.specialize_q1(hecke.c_basis(w, table))
    return {word_str(y.word): spec[y] for y in G.elements if y in spec}, 0


COMMANDS = {
    "graph-validate": cmd_graph_validate,
    "enumerate": cmd_enumerate,
    "kl": cmd_kl,
    "afunction": cmd_afunction,
    "cells": cmd_cells,
    "dihedral-decompose": cmd_dihedral_decompose,
    "rep-check": cmd_rep_check,
    "rrep-build": cmd_rrep_build,
    "rrep-classify": cmd_rrep_classify,
    "specialize": cmd_specialize,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxcell", description="Kazhdan-Lusztig cells and a-value-1 representations")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--graph")
        p.add_argument("--rep")
        p.add_argument("--x", action="append", help="parameter 'p/q' or cyclotomic JSON (repeatable for rrep-classify)")
        p.add_argument("--cap", type=int, help=f"length cap (default {DEFAULT_LENGTH_CAP}, env COXCELL_CAP)")
        p.add_argument("--format", choices=("json", "dot"), default="json")
        p.add_argument("--out")
        if name == "afunction":
            p.add_argument("--with-constants", action="store_true")
        if name == "rrep-build":
            p.add_argument("--tilde", action="store_true", help="emit V~_x before the quotient")
        if name == "specialize":
            p.add_argument("--word", help="comma-separated letters or JSON array")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        payload, code = COMMANDS[args.command](args)
    except (UsageError, CoxcellError, ValueError, ZeroDivisionError) as exc:
        print(f"coxcell {args.command}: {exc}", file=sys.stderr)
        return 2
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
