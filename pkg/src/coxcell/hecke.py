"""
Hecke algebra in the normalized basis T_w, Kazhdan-Lusztig polynomials,
the C-basis, structure constants, Lusztig's a-function and two-sided cells.

Coefficients are Laurent polynomials in v = q^(1/2). The multiplication rule is

    T_s T_w = T_sw                      if l(sw) > l(w)
    T_s T_w = (v - 1/v) T_w + T_sw      if l(sw) < l(w)

and C_w = sum_y (-1)^(l(w)+l(y)) v^(l(w)-l(y)) P_{y,w}(v^-2) T_y, so that
C_s = T_s - v. Everything except :func:`t_mul_gen` needs a finite group.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .arith import ONE, V, V_INV, IntPoly, LaurentPoly
from .coxeter import CoxeterGraph, Element, FiniteCoxeterGroup, word_str

V_MINUS_VINV = V - V_INV


# ---------------------------------------------------------------------------
# Hecke elements


class HeckeElement:
    """A finite combination sum_w coeff_w T_w with LaurentPoly coefficients."""

    __slots__ = ("graph", "terms")

    def __init__(self, graph: CoxeterGraph, terms: Mapping[Element, LaurentPoly] | None = None):
        self.graph = graph
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, w: Element) -> HeckeElement:
        return cls(w.graph, {w: ONE})

    def __add__(self, other: HeckeElement) -> HeckeElement:
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, LaurentPoly()) + c
        return HeckeElement(self.graph, terms)

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + other.scale(LaurentPoly({0: -1}))

    def scale(self, c: LaurentPoly | int) -> HeckeElement:
        return HeckeElement(self.graph, {w: x * c for w, x in self.terms.items()})

    def coefficient(self, w: Element) -> LaurentPoly:
        return self.terms.get(w, LaurentPoly())

    def __mul__(self, other: HeckeElement) -> HeckeElement:
        # T_x H = T_{s1} (T_{s2} (... (T_{sk} H)))
        out = HeckeElement(self.graph)
        for x, c in self.terms.items():
            h = other
            for s in reversed(x.word):
                h = t_mul_gen(s, h, "left")
            out = out + h.scale(c)
        return out

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"({c})*T[{w}]" for w, c in sorted(self.terms.items(), key=lambda kv: kv[0])]
        return " + ".join(parts)


def t_mul_gen(s: str, h: HeckeElement, side: str = "left") -> HeckeElement:
    """T_s * h (side='left') or h * T_s (side='right')."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    terms: dict[Element, LaurentPoly] = {}

    def put(w, c):
        terms[w] = terms.get(w, LaurentPoly()) + c

    for w, c in h.terms.items():
        sw = w.left_mul(s) if side == "left" else w.right_mul(s)
        if sw.length > w.length:
            put(sw, c)
        else:
            put(w, c * V_MINUS_VINV)
            put(sw, c)
    return HeckeElement(h.graph, terms)


# ---------------------------------------------------------------------------
# Kazhdan-Lusztig polynomials


@dataclass
class KLTable:
    """P_{y,w} and mu(y,w) for a finite Coxeter group, indexed by element number."""

    group: FiniteCoxeterGroup
    P: dict[tuple[int, int], IntPoly]
    mu: dict[tuple[int, int], int]
    below: list[frozenset[int]] = field(repr=False)

    def poly(self, y, w) -> IntPoly:
        i, j = self.group.idx(y), self.group.idx(w)
        return self.P.get((i, j), IntPoly())

    def mu_value(self, y, w) -> int:
        return self.mu.get((self.group.idx(y), self.group.idx(w)), 0)

    def leq(self, y, w) -> bool:
        return self.group.idx(y) in self.below[self.group.idx(w)]

    def to_json(self) -> dict:
        words = [word_str(e.word) for e in self.group.elements]
        P: dict[str, dict] = {}
        for (y, w), p in sorted(self.P.items()):
            P.setdefault(words[w], {})[words[y]] = p.to_json()
        mu = [
            {"y": words[y], "w": words[w], "mu": m}
            for (y, w), m in sorted(self.mu.items())
            if m
        ]
        return {"generators": list(self.group.graph.generators), "P": P, "mu": mu}


def kl_table(g: CoxeterGraph | FiniteCoxeterGroup) -> KLTable:
    """Kazhdan-Lusztig polynomials by the standard descent recursion.

    For w = s v with v < w and y <= w, with c = 1 if sy < y and c = 0 otherwise:

        P_{y,w} = q^(1-c) P_{sy,v} + q^c P_{y,v}
                  - sum_{z < v, sz < z} mu(z,v) q^((l(w)-l(z))/2) P_{y,z}
    """
    G = g if isinstance(g, FiniteCoxeterGroup) else FiniteCoxeterGroup.from_graph(g)
    n = len(G)
    below = G.bruhat_ideals()
    L = G.lengths
    P: dict[tuple[int, int], IntPoly] = {}
    mu: dict[tuple[int, int], int] = {}
    # mu_below[v] = [(z, mu(z, v))] with mu nonzero
    mu_below: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    one = IntPoly({0: 1})
    zero = IntPoly()

    for w in range(n):
        P[(w, w)] = one
        if w == 0:
            continue
        s = G.elements[w].word[0]
        lm = G.lmul[s]
        v = lm[w]
        correction = [(z, m) for z, m in mu_below[v] if L[lm[z]] < L[z]]
        for y in below[w]:
            if y == w:
                continue
            sy = lm[y]
            c = 1 if L[sy] < L[y] else 0
            p = P.get((sy, v), zero).shift(1 - c) + P.get((y, v), zero).shift(c)
            for z, m in correction:
                if y in below[z]:
                    p = p - P[(y, z)].shift((L[w] - L[z]) // 2) * m
            if p:
                P[(y, w)] = p
        for y in below[w]:
            d = L[w] - L[y]
            if d % 2 == 1:
                m = P.get((y, w), zero).coefficient((d - 1) // 2)
                if m:
                    mu[(y, w)] = m
                    mu_below[w].append((y, m))
    return KLTable(G, P, mu, below)


def c_basis(w, table: KLTable) -> HeckeElement:
    """C_w expanded in the T-basis."""
    G = table.group
    wi = G.idx(w)
    lw = G.lengths[wi]
    terms = {}
    for y in table.below[wi]:
        p = table.P.get((y, wi))
        if not p:
            continue
        d = lw - G.lengths[y]
        sign = -1 if d % 2 else 1
        # v^d P(v^-2)
        terms[G.elements[y]] = LaurentPoly({d - 2 * k: sign * a for k, a in p.items()})
    return HeckeElement(G.graph, terms)


def c_expand(h: HeckeElement, table: KLTable) -> dict[int, LaurentPoly]:
    """Coefficients of h in the C-basis, by length-descending triangular elimination."""
    G = table.group
    rem = {G.index[w]: c for w, c in h.terms.items() if c}
    out: dict[int, LaurentPoly] = {}
    cvec = _c_vectors(table)
    while rem:
        w = max(rem, key=lambda i: (G.lengths[i], i))
        c = rem[w]
        out[w] = c
        for y, p in cvec[w].items():
            val = rem.get(y, LaurentPoly()) - p * c
            if val:
                rem[y] = val
            else:
                rem.pop(y, None)
    return out


def _c_vectors(table: KLTable) -> list[dict[int, LaurentPoly]]:
    cache = table.__dict__.get("_cvec")
    if cache is None:
        G = table.group
        cache = [{G.index[y]: c for y, c in c_basis(w, table).terms.items()} for w in range(len(G))]
        table.__dict__["_cvec"] = cache
    return cache


# ---------------------------------------------------------------------------
# structure constants


@dataclass
class StructureConstants:
    """h_{x,y,w} with C_x C_y = sum_w h_{x,y,w} C_w, stored sparsely."""

    table: KLTable
    h: dict[tuple[int, int], dict[int, LaurentPoly]]

    @property
    def group(self) -> FiniteCoxeterGroup:
        return self.table.group

    def get(self, x, y, w) -> LaurentPoly:
        G = self.group
        return self.h[(G.idx(x), G.idx(y))].get(G.idx(w), LaurentPoly())

    def product(self, x, y) -> dict[int, LaurentPoly]:
        G = self.group
        return self.h[(G.idx(x), G.idx(y))]

    def items(self) -> Iterable[tuple[int, int, int, LaurentPoly]]:
        for (x, y), row in self.h.items():
            for w, c in row.items():
                yield x, y, w, c

    def to_json(self) -> dict:
        words = [word_str(e.word) for e in self.group.elements]
        out: dict[str, dict] = {}
        for (x, y), row in sorted(self.h.items()):
            for w, c in sorted(row.items()):
                out.setdefault(words[x], {}).setdefault(words[y], {})[words[w]] = c.to_json()
        return {"generators": list(self.group.graph.generators), "h": out}


def _t_left_idx(G: FiniteCoxeterGroup, s: str, vec: dict[int, LaurentPoly]) -> dict[int, LaurentPoly]:
    out: dict[int, LaurentPoly] = {}
    lm = G.lmul[s]
    L = G.lengths
    for w, c in vec.items():
        sw = lm[w]
        if L[sw] > L[w]:
            out[sw] = out.get(sw, LaurentPoly()) + c
        else:
            out[w] = out.get(w, LaurentPoly()) + c * V_MINUS_VINV
            out[sw] = out.get(sw, LaurentPoly()) + c
    return {k: c for k, c in out.items() if c}


def h_constants(g: CoxeterGraph | FiniteCoxeterGroup | KLTable) -> StructureConstants:
    """All structure constants of the C-basis.

    Each product C_x C_y is formed in the T-basis and re-expanded in the
    C-basis. T_z C_y is built once per (z, y) by extending z on the left.
    """
    table = g if isinstance(g, KLTable) else kl_table(g)
    G = table.group
    n = len(G)
    cvec = _c_vectors(table)
    h: dict[tuple[int, int], dict[int, LaurentPoly]] = {}
    for y in range(n):
        # tz_cy[z] = T_z C_y
        tz_cy: list[dict[int, LaurentPoly]] = [dict() for _ in range(n)]
        tz_cy[0] = dict(cvec[y])
        for z in range(1, n):
            s = G.elements[z].word[0]
            tz_cy[z] = _t_left_idx(G, s, tz_cy[G.lmul[s][z]])
        for x in range(n):
            prod: dict[int, LaurentPoly] = {}
            for z, c in cvec[x].items():
                for u, d in tz_cy[z].items():
                    prod[u] = prod.get(u, LaurentPoly()) + c * d
            prod = {u: c for u, c in prod.items() if c}
            h[(x, y)] = _c_expand_idx(G, prod, cvec)
    return StructureConstants(table, h)


def _c_expand_idx(G, rem: dict[int, LaurentPoly], cvec) -> dict[int, LaurentPoly]:
    rem = dict(rem)
    out: dict[int, LaurentPoly] = {}
    while rem:
        w = max(rem, key=lambda i: (G.lengths[i], i))
        c = rem.pop(w)
        out[w] = c
        for y, p in cvec[w].items():
            if y == w:
                continue
            val = rem.get(y, LaurentPoly()) - p * c
            if val:
                rem[y] = val
            else:
                rem.pop(y, None)
    return out


def cs_times_cw(table: KLTable, s: str, w: int, side: str = "left") -> dict[int, LaurentPoly]:
    """C_s C_w (or C_w C_s) in the C-basis from the mu-table.

    If sw < w the product is -(v + 1/v) C_w; otherwise it is
    C_sw + sum mu(z,w) C_z over z < w with sz < z.
    """
    G = table.group
    mul = G.lmul[s] if side == "left" else G.rmul[s]
    L = G.lengths
    sw = mul[w]
    if L[sw] < L[w]:
        return {w: -(V + V_INV)}
    out = {sw: ONE}
    for (z, ww), m in table.mu.items():
        if ww == w and L[mul[z]] < L[z]:
            out[z] = out.get(z, LaurentPoly()) + LaurentPoly({0: m})
    return out


# ---------------------------------------------------------------------------
# a-function and cells


def a_value(w, h: StructureConstants) -> int:
    """Lusztig's a(w): the largest pole order in v among all h_{x,y,w}."""
    wi = h.group.idx(w)
    worst = 0
    for row in h.h.values():
        c = row.get(wi)
        if c:
            worst = max(worst, -c.lowest_degree())
    return worst


def a_values(h: StructureConstants) -> dict[Element, int]:
    """a(w) for every element (one pass over the table)."""
    G = h.group
    worst = [0] * len(G)
    for _, _, w, c in h.items():
        worst[w] = max(worst[w], -c.lowest_degree())
    return {G.elements[i]: a for i, a in enumerate(worst)}


@dataclass
class CellPartition:
    """Two-sided cells and their order.

    ``order`` holds pairs (i, j) with block i <=_LR block j, i.e. block i is
    reachable from block j in the multiplication digraph.
    """

    group: FiniteCoxeterGroup
    blocks: list[list[Element]]
    order: set[tuple[int, int]]

    def block_of(self, w) -> int:
        i = self.group.idx(w)
        e = self.group.elements[i]
        for k, b in enumerate(self.blocks):
            if e in b:
                return k
        raise KeyError(w)

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.order

    def lowest(self) -> int:
        (low,) = [i for i in range(len(self.blocks)) if all(self.leq(i, j) for j in range(len(self.blocks)))]
        return low

    def hasse(self) -> list[tuple[int, int]]:
        """Covering pairs (lower, upper)."""
        n = len(self.blocks)
        out = []
        for i, j in sorted(self.order):
            if i == j:
                continue
            if not any(k not in (i, j) and (i, k) in self.order and (k, j) in self.order for k in range(n)):
                out.append((i, j))
        return out

    def to_json(self) -> dict:
        return {
            "cells": [[str(w) for w in b] for b in self.blocks],
            "order": [list(p) for p in sorted(self.order) if p[0] != p[1]],
        }

    def to_dot(self, a: Mapping[Element, int] | None = None) -> str:
        lines = ["digraph cells {", "  rankdir=BT;"]
        for i, b in enumerate(self.blocks):
            label = ", ".join(str(w) for w in b)
            if a is not None:
                label += f"\\na = {a[b[0]]}"
            lines.append(f'  c{i} [shape=box, label="{label}"];')
        for i, j in self.hasse():
            lines.append(f"  c{i} -> c{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def lr_cells(g: CoxeterGraph | FiniteCoxeterGroup | KLTable) -> CellPartition:
    """Two-sided cells from the digraph x -> y whenever C_y occurs in C_s C_x or C_x C_s."""
    table = g if isinstance(g, KLTable) else kl_table(g)
    G = table.group
    n = len(G)
    succ = [set() for _ in range(n)]
    for x in range(n):
        for s in G.graph.generators:
            for side in ("left", "right"):
                succ[x].update(cs_times_cw(table, s, x, side))
    reach = []
    for x in range(n):
        seen = {x}
        stack = [x]
        while stack:
            u = stack.pop()
            for y in succ[u]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        reach.append(seen)
    block_id = [-1] * n
    blocks: list[list[int]] = []
    for x in range(n):
        if block_id[x] >= 0:
            continue
        members = [y for y in range(n) if y in reach[x] and x in reach[y]]
        for y in members:
            block_id[y] = len(blocks)
        blocks.append(members)
    order = set()
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            if bi[0] in reach[bj[0]]:
                order.add((i, j))
    return CellPartition(G, [[G.elements[k] for k in b] for b in blocks], order)


# ---------------------------------------------------------------------------
# q = 1


def specialize_q1(h: HeckeElement) -> dict[Element, int]:
    """The group-algebra element obtained by setting v = 1."""
    out = {}
    for w, c in h.terms.items():
        a = c.evaluate_at_one()
        if a:
            out[w] = a
    return out


def cell_rep_matrices(cell: Iterable, h: StructureConstants) -> dict[Element, list[list[int]]]:
    """Matrices of C_x on the cell module with basis J_y (y in the cell), at v = 1.

    Column y, row w holds h_{x,y,w}(1).
    """
    G = h.group
    idx = sorted(G.idx(c) for c in cell)
    out = {}
    for x in range(len(G)):
        M = [[0] * len(idx) for _ in idx]
        for j, y in enumerate(idx):
            row = h.h[(x, y)]
            for i, w in enumerate(idx):
                c = row.get(w)
                if c:
                    M[i][j] = c.evaluate_at_one()
        out[G.elements[x]] = M
    return out
