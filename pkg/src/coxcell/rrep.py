"""
Reflection-type representations of a-value 1 for simply laced graphs that
are trees or have exactly one cycle.

For a tree the only irreducible one is the simple quotient of the geometric
representation. For a graph with one cycle s_0 - s_1 - ... - s_n - s_0 there
is a family indexed by nonzero x: on the basis {alpha_s},

    s . alpha_s   = -alpha_s
    s_0 . alpha_sn = alpha_sn + x alpha_s0,   s_n . alpha_s0 = alpha_s0 + (1/x) alpha_sn
    s . alpha_t   = alpha_t + alpha_s   (m_st = 3, other pairs)
    s . alpha_t   = alpha_t             (m_st = 2)

and V_x is its quotient by the vectors fixed by the whole group. The scalar x
is recovered as the holonomy of the maps f_tr: v -> t.v - v around the cycle.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from . import linalg as la
from .arith import CycloNumber, coerce, conductor_of, scalar_to_json, two_cos
from .coxeter import INF, CoxeterGraph
from .errors import PreconditionError, RelationError, UnsupportedGraphError
from .reps import (
    MatrixRep,
    a1_criterion,
    check_relations,
    classify_a_value,
    fixed_subspace,
    is_r_rep,
    minus_eigenspace,
    require_relations,
)


def geometric_rep(g: CoxeterGraph) -> MatrixRep:
    """The reflection representation s.beta_t = beta_t + 2cos(pi/m_st) beta_s.

    Infinite edges get the coefficient 2. The field is Q when every finite
    m_st is 2 or 3, otherwise Q(zeta_N) with N = 2 lcm(finite m_st).
    """
    finite = [g.m(s, t) for s, t, _ in g.edges(min_order=2) if g.m(s, t) != INF]
    if all(m <= 3 for m in finite):
        conductor = None
    else:
        conductor = 2 * math.lcm(*finite)
    n = g.rank
    mats = {}
    for i, s in enumerate(g.generators):
        M = la.identity(n, one=coerce(1, conductor), zero=coerce(0, conductor))
        for j, t in enumerate(g.generators):
            M[i][j] = coerce(-1, conductor) if i == j else _edge_coeff(g.m(s, t), conductor)
        mats[s] = M
    return MatrixRep(g, mats, conductor)


def _edge_coeff(m, conductor):
    if m == INF:
        return coerce(2, conductor)
    if m == 2:
        return coerce(0, conductor)
    if m == 3:
        return coerce(1, conductor)
    return coerce(two_cos(1, m, conductor), conductor)


def bilinear_form(g: CoxeterGraph) -> list[list]:
    """Gram matrix B(beta_s, beta_t) = -2cos(pi/m_st), B(beta_s, beta_s) = 2."""
    rep = geometric_rep(g)
    n = g.rank
    return [[coerce(2, rep.conductor) if i == j else -rep.matrices[s][i][j] for j in range(n)]
            for i, s in enumerate(g.generators)]


def form_radical(g: CoxeterGraph) -> list[list]:
    return la.nullspace(bilinear_form(g))


# ---------------------------------------------------------------------------
# one-cycle family


def find_cycle(g: CoxeterGraph) -> list[str]:
    """The unique cycle s_0, s_1, ..., s_n of the m >= 3 edge graph.

    Leaves are stripped until only the cycle remains; s_0 is its first vertex
    in generator order and s_1 its earlier cycle neighbour.
    """
    if g.cycle_count != 1:
        raise UnsupportedGraphError(f"graph has {g.cycle_count} independent cycles, expected 1")
    alive = set(g.generators)
    deg = {s: len(g.neighbors(s)) for s in alive}
    queue = deque(s for s in alive if deg[s] <= 1)
    while queue:
        s = queue.popleft()
        if s not in alive:
            continue
        alive.discard(s)
        for t in g.neighbors(s):
            if t in alive:
                deg[t] -= 1
                if deg[t] <= 1:
                    queue.append(t)
    order = [s for s in g.generators if s in alive]
    s0 = order[0]
    nbrs = sorted((t for t in g.neighbors(s0) if t in alive), key=g.index.__getitem__)
    cycle = [s0, nbrs[0]]
    while True:
        nxt = [t for t in g.neighbors(cycle[-1]) if t in alive and t != cycle[-2]]
        if nxt[0] == s0:
            break
        cycle.append(nxt[0])
    return cycle


def _check_cycle(g: CoxeterGraph, cycle: Sequence[str]):
    if len(set(cycle)) != len(cycle) or len(cycle) < 3:
        raise PreconditionError(f"{list(cycle)} is not a simple cycle")
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        if g.m(a, b) != 3:
            raise PreconditionError(f"cycle edge {a}-{b} has order {g.m(a, b)}, expected 3")


def _check_parameter(x):
    if isinstance(x, float) or isinstance(x, complex):
        raise PreconditionError("parameter x must be exact (rational or cyclotomic)")
    if not isinstance(x, (Rational, CycloNumber)):
        raise PreconditionError(f"unsupported parameter {x!r}")
    if x == 0:
        raise PreconditionError("parameter x must be nonzero")


@dataclass
class RRepSpec:
    graph: CoxeterGraph
    x: object = None
    cycle: list[str] | None = None

    def __post_init__(self):
        g = self.graph
        if not g.simply_laced:
            raise UnsupportedGraphError("graph is not simply laced")
        if not g.connected:
            raise PreconditionError("graph is not connected")
        if g.cycle_count > 1:
            raise UnsupportedGraphError(f"graph has {g.cycle_count} independent cycles (at most 1 supported)")
        if g.cycle_count == 1:
            if self.x is None:
                raise PreconditionError("a one-cycle graph needs a parameter x")
            _check_parameter(self.x)
            if isinstance(self.x, int):
                self.x = Fraction(self.x)
            if self.cycle is None:
                self.cycle = find_cycle(g)
            _check_cycle(g, self.cycle)
        elif self.x is not None:
            raise PreconditionError("a tree has no parameter")


def build_Vx(spec: RRepSpec) -> MatrixRep:
    """The representation on span{alpha_s} attached to the parameter x."""
    g = spec.graph
    if g.cycle_count != 1:
        raise UnsupportedGraphError("build_Vx needs a graph with exactly one cycle")
    x = spec.x
    conductor = conductor_of(x)
    x = coerce(x, conductor)
    s0, sn = spec.cycle[0], spec.cycle[-1]
    n = g.rank
    mats = {}
    for i, s in enumerate(g.generators):
        M = la.identity(n, one=coerce(1, conductor), zero=coerce(0, conductor))
        for j, t in enumerate(g.generators):
            if i == j:
                c = coerce(-1, conductor)
            elif (s, t) == (s0, sn):
                c = x
            elif (s, t) == (sn, s0):
                c = 1 / x
            else:
                c = coerce(1 if g.m(s, t) == 3 else 0, conductor)
            M[i][j] = c
        mats[s] = M
    rep = MatrixRep(g, mats, conductor)
    require_relations(rep)
    return rep


def quotient(rep: MatrixRep, subspace: Sequence[Sequence]) -> MatrixRep:
    """Induced representation on V / U for an invariant subspace U.

    U's basis is extended by standard vectors; the quotient acts on the
    classes of the added vectors.
    """
    U = la.span_basis([[coerce(x, rep.conductor) for x in u] for u in subspace]) if subspace else []
    for s in rep.graph.generators:
        for u in U:
            if la.span_dim(U + [la.matvec(rep[s], u)]) > len(U):
                raise PreconditionError(f"subspace is not invariant under {s}")
    k = len(U)
    basis = la.extend_to_basis(U, rep.dim)
    P = la.transpose(basis)
    Pinv = la.inverse(P)
    mats = {}
    for s in rep.graph.generators:
        Q = la.matmul(Pinv, la.matmul(rep[s], P))
        mats[s] = [row[k:] for row in Q[k:]]
    return MatrixRep(rep.graph, mats, rep.conductor)


def algebra_dimension(rep: MatrixRep) -> int:
    """Dimension of the linear span of all products of generator matrices."""
    span = la.EchelonSpan()
    I = rep.identity()
    flat = lambda M: [x for row in M for x in row]
    span.add(flat(I))
    queue = deque([I])
    while queue:
        M = queue.popleft()
        for s in rep.graph.generators:
            N = la.matmul(rep[s], M)
            if span.add(flat(N)):
                queue.append(N)
    return len(span)


def irreducible(rep: MatrixRep) -> bool:
    """Burnside test: the generated matrix algebra is all of End(V)."""
    return algebra_dimension(rep) == rep.dim**2


# ---------------------------------------------------------------------------
# f-maps and holonomy


def _apply_f(rep: MatrixRep, t: str, v):
    """t.v - v."""
    return [a - b for a, b in zip(la.matvec(rep[t], v), v)]


def f_map(rep: MatrixRep, t: str, r: str, check: bool = True) -> list[list]:
    """Matrix of f_tr: V_r^- -> V_t^-, v -> t.v - v, in the computed eigenspace bases."""
    if rep.graph.m(r, t) != 3:
        raise PreconditionError(f"f-map needs m({r},{t}) = 3, got {rep.graph.m(r, t)}")
    if check:
        require_relations(rep)
        if a1_criterion(rep) is not None:
            raise PreconditionError("representation fails the a-value-1 criterion")
    Br = minus_eigenspace(rep, r)
    Bt = minus_eigenspace(rep, t)
    cols = []
    for v in Br:
        c = la.coordinates(Bt, _apply_f(rep, t, v))
        if c is None:
            raise ArithmeticError("t.v - v left the -1 eigenspace of t")
        cols.append(c)
    if not cols:
        return [[] for _ in Bt]
    return la.transpose(cols)


def holonomy(rep: MatrixRep, cycle: Sequence[str] | None = None):
    """Scalar by which f_{s0 sn} ... f_{s2 s1} f_{s1 s0} acts on the line V_{s0}^-."""
    g = rep.graph
    cycle = list(cycle) if cycle is not None else find_cycle(g)
    _check_cycle(g, cycle)
    check = is_r_rep(rep)
    if not check:
        raise PreconditionError(f"not an R-representation: {check.detail}")
    X = None
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        F = f_map(rep, b, a, check=False)
        X = F if X is None else la.matmul(F, X)
    return X[0][0]


def transport_lines(rep: MatrixRep, base: str, vector=None) -> dict[str, list]:
    """alpha_s obtained from alpha_base by f-maps along a breadth-first spanning tree."""
    g = rep.graph
    alpha = {base: list(vector) if vector is not None else minus_eigenspace(rep, base)[0]}
    queue = deque([base])
    while queue:
        r = queue.popleft()
        for t in g.neighbors(r):
            if t not in alpha:
                alpha[t] = _apply_f(rep, t, alpha[r])
                queue.append(t)
    return alpha


def transport_along(rep: MatrixRep, path: Sequence[str], vector) -> list:
    """Apply f_{p1 p0}, then f_{p2 p1}, ... to a vector of V_{p0}^-."""
    v = list(vector)
    for a, b in zip(path, path[1:]):
        if rep.graph.m(a, b) != 3:
            raise PreconditionError(f"path step {a}-{b} is not an order-3 edge")
        v = _apply_f(rep, b, v)
    return v


# ---------------------------------------------------------------------------
# classification


@dataclass
class CatalogEntry:
    kind: str  # "tree-unique" | "cycle-family"
    rep: MatrixRep
    parameter: object = None
    holonomy: object = None
    certificates: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.rep.dim

    @property
    def certified(self) -> bool:
        c = self.certificates
        return bool(c.get("relations") and c.get("irreducible") and c.get("r_rep") and c.get("a_value") == "1")

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "dim": self.dim,
            "parameter": None if self.parameter is None else scalar_to_json(self.parameter),
            "holonomy": None if self.holonomy is None else scalar_to_json(self.holonomy),
            "certificates": dict(self.certificates),
        }


def _certify(rep: MatrixRep) -> dict:
    relations = check_relations(rep) is None
    cert = {"relations": relations}
    if not relations:
        return cert
    cert["irreducible"] = irreducible(rep)
    cert["r_rep"] = bool(is_r_rep(rep))
    verdict = classify_a_value(rep).verdict
    cert["a_value"] = {"value0": "0", "value1": "1", "greater_than_1": ">1"}[verdict]
    return cert


def simple_tree_rep(g: CoxeterGraph) -> MatrixRep:
    """Geometric representation modulo the radical of its invariant form."""
    rep = geometric_rep(g)
    rad = form_radical(g)
    return quotient(rep, rad) if rad else rep


def cycle_rep(g: CoxeterGraph, x, cycle=None) -> tuple[MatrixRep, MatrixRep, list]:
    """(V~_x, V_x, basis of the fixed subspace U_x)."""
    spec = RRepSpec(g, x, cycle)
    tilde = build_Vx(spec)
    U = fixed_subspace(tilde)
    return tilde, (quotient(tilde, U) if U else tilde), U


def classify(g: CoxeterGraph, samples: Iterable = ()) -> list[CatalogEntry]:
    """Certified irreducible a-value-1 representations.

    A tree yields its single representation; a one-cycle graph yields V_x for
    every sample x, each with its holonomy.
    """
    if g.cycle_count >= 2:
        raise UnsupportedGraphError(
            f"graph has {g.cycle_count} independent cycles; only trees and one-cycle graphs are supported"
        )
    RRepSpec(g, None if g.cycle_count == 0 else 1)  # validates shape
    if g.cycle_count == 0:
        rep = simple_tree_rep(g)
        return [CatalogEntry("tree-unique", rep, certificates=_certify(rep))]
    cycle = find_cycle(g)
    out = []
    for x in samples:
        _, rep, _ = cycle_rep(g, x, cycle)
        out.append(CatalogEntry("cycle-family", rep, x, holonomy(rep, cycle), _certify(rep)))
    return out


def distinct_holonomies(entries: Sequence[CatalogEntry]) -> bool:
    hs = [e.holonomy for e in entries]
    return all(hs[i] != hs[j] for i in range(len(hs)) for j in range(i + 1, len(hs)))
