"""
Finite-dimensional matrix representations of Coxeter groups and their
a-function value class.

A representation assigns a square matrix to each generator. A nonzero
representation has a-value 1 exactly when no two generators r != t with
m_rt finite share an eigenvector of eigenvalue -1; :func:`a1_criterion`
decides this by exact kernel intersections and :func:`cwrt_annihilation`
decides the equivalent statement that every C_{w_rt} (at q = 1) acts by zero.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import linalg as la
from .arith import CycloNumber, coerce, scalar_from_json, scalar_to_json
from .coxeter import INF, CoxeterGraph, Element, validate_graph
from .dihedral import cwrt_action
from .errors import PreconditionError, RelationError, UnsupportedGraphError


@dataclass
class MatrixRep:
    """Generator matrices of a representation over Q or Q(zeta_conductor).

    ``conductor`` is None for the rational field.
    """

    graph: CoxeterGraph
    matrices: dict[str, list[list]]
    conductor: int | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        missing = [s for s in self.graph.generators if s not in self.matrices]
        if missing:
            raise ValueError(f"no matrix for generators {missing}")
        dims = {len(M) for M in self.matrices.values()} | {len(row) for M in self.matrices.values() for row in M}
        if len(dims) != 1:
            raise ValueError("generator matrices must be square and of equal size")
        self.matrices = {
            s: [[coerce(x, self.conductor) for x in row] for row in self.matrices[s]] for s in self.graph.generators
        }

    @property
    def dim(self) -> int:
        return len(next(iter(self.matrices.values())))

    @property
    def field_json(self) -> dict:
        if self.conductor is None:
            return {"type": "rational"}
        return {"type": "cyclotomic", "conductor": self.conductor}

    def zero(self):
        return coerce(0, self.conductor)

    def one(self):
        return coerce(1, self.conductor)

    def identity(self):
        return la.identity(self.dim, one=self.one(), zero=self.zero())

    def __getitem__(self, s: str):
        return self.matrices[s]

    def element_matrix(self, w: Element | tuple) -> list[list]:
        word = w.word if isinstance(w, Element) else tuple(w)
        M = self.identity()
        for s in word:
            M = la.matmul(M, self.matrices[s])
        return M

    def act(self, combination: Mapping) -> list[list]:
        """Matrix of a group-algebra element {w: coefficient}."""
        total = la.zeros(self.dim, self.dim, self.zero())
        for w, c in combination.items():
            total = la.add(total, la.scale(coerce(c, self.conductor), self.element_matrix(w)))
        return total

    def relabel(self, conductor: int) -> MatrixRep:
        """The same representation over Q(zeta_conductor)."""
        return MatrixRep(self.graph, self.matrices, conductor)

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "field": self.field_json,
            "dim": self.dim,
            "matrices": {s: [[scalar_to_json(x) for x in row] for row in M] for s, M in self.matrices.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> MatrixRep:
        try:
            g = validate_graph(data["graph"])
            fld = data.get("field", {"type": "rational"})
            if fld.get("type") == "cyclotomic":
                conductor = int(fld["conductor"])
            elif fld.get("type") == "rational":
                conductor = None
            else:
                raise ValueError(f"unknown field {fld!r}")
            mats = {
                s: [[scalar_from_json(x, conductor) for x in row] for row in M] for s, M in data["matrices"].items()
            }
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValueError(f"malformed representation JSON: {exc}") from None
        rep = cls(g, mats, conductor)
        if "dim" in data and int(data["dim"]) != rep.dim:
            raise ValueError(f"declared dim {data['dim']} != matrix size {rep.dim}")
        return rep


def direct_sum(*reps: MatrixRep) -> MatrixRep:
    g = reps[0].graph
    conductor = None
    for r in reps:
        if r.conductor is not None:
            conductor = r.conductor if conductor is None else math.lcm(conductor, r.conductor)
    mats = {
        s: la.direct_sum(*[[[coerce(x, conductor) for x in row] for row in r.matrices[s]] for r in reps])
        for s in g.generators
    }
    return MatrixRep(g, mats, conductor)


def conjugate(rep: MatrixRep, P) -> MatrixRep:
    """The representation P^-1 rho P."""
    P = [[coerce(x, rep.conductor) for x in row] for row in P]
    Pinv = la.inverse(P)
    return MatrixRep(rep.graph, {s: la.matmul(Pinv, la.matmul(M, P)) for s, M in rep.matrices.items()}, rep.conductor)


def trivial_rep(g: CoxeterGraph, dim: int = 1) -> MatrixRep:
    return MatrixRep(g, {s: la.identity(dim) for s in g.generators})


def sign_rep(g: CoxeterGraph) -> MatrixRep:
    return MatrixRep(g, {s: [[Fraction(-1)]] for s in g.generators})


# ---------------------------------------------------------------------------
# checks


def check_relations(rep: MatrixRep) -> str | None:
    """First violated Coxeter relation, or None if all hold exactly."""
    I = rep.identity()
    for s in rep.graph.generators:
        if not la.equal(la.matmul(rep[s], rep[s]), I):
            return f"{s}^2 != 1"
    for s, t in itertools.combinations(rep.graph.generators, 2):
        m = rep.graph.m(s, t)
        if m == INF:
            continue
        if not la.equal(la.power(la.matmul(rep[s], rep[t]), m), I):
            return f"({s}{t})^{m} != 1"
    return None


def require_relations(rep: MatrixRep) -> None:
    bad = check_relations(rep)
    if bad:
        raise RelationError(f"not a representation: {bad}")


def minus_eigenspace(rep: MatrixRep, s: str) -> list[list]:
    """Basis of the -1 eigenspace of rho(s)."""
    key = ("minus", s)
    if key not in rep._cache:
        M = rep[s]
        I = rep.identity()
        basis = la.nullspace(la.add(M, I))
        plus = la.nullspace(la.sub(M, I))
        if len(basis) + len(plus) != rep.dim:
            raise RelationError(f"rho({s}) is not diagonalizable with eigenvalues +-1")
        rep._cache[key] = basis
    return rep._cache[key]


def plus_eigenspace(rep: MatrixRep, s: str) -> list[list]:
    return la.nullspace(la.sub(rep[s], rep.identity()))


def fixed_subspace(rep: MatrixRep) -> list[list]:
    """Vectors fixed by every generator (hence by the whole group)."""
    I = rep.identity()
    stacked = [row for s in rep.graph.generators for row in la.sub(rep[s], I)]
    return la.nullspace(stacked)


def _finite_pairs(g: CoxeterGraph):
    for r, t in itertools.combinations(g.generators, 2):
        if g.m(r, t) != INF:
            yield r, t


def common_minus_vectors(rep: MatrixRep, r: str, t: str) -> list[list]:
    I = rep.identity()
    return la.nullspace(la.add(rep[r], I) + la.add(rep[t], I))


@dataclass
class Witness:
    r: str
    t: str
    vector: list

    def to_json(self) -> dict:
        return {"pair": [self.r, self.t], "vector": [scalar_to_json(x) for x in self.vector]}


def a1_criterion(rep: MatrixRep) -> Witness | None:
    """None if no pair r != t (m_rt finite) has a common -1 eigenvector; else a witness."""
    for r, t in _finite_pairs(rep.graph):
        ker = common_minus_vectors(rep, r, t)
        if ker:
            return Witness(r, t, ker[0])
    return None


def cwrt_annihilation(rep: MatrixRep) -> bool:
    """True iff C_{w_rt} (at q = 1) acts by zero for every pair with m_rt finite."""
    for r, t in _finite_pairs(rep.graph):
        if not la.is_zero(cwrt_action(rep[r], rep[t], rep.graph.m(r, t))):
            return False
    return True


@dataclass
class A1Report:
    verdict: str  # "value0" | "value1" | "greater_than_1"
    witness: Witness | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def classify_a_value(rep: MatrixRep) -> A1Report:
    require_relations(rep)
    if rep.dim == 0:
        raise PreconditionError("the zero representation has no a-value")
    I = rep.identity()
    if all(la.equal(rep[s], I) for s in rep.graph.generators):
        return A1Report("value0")
    w = a1_criterion(rep)
    if w is None:
        return A1Report("value1")
    return A1Report("greater_than_1", w)


@dataclass
class RRepCheck:
    ok: bool
    failed_condition: int | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def is_r_rep(rep: MatrixRep) -> RRepCheck:
    """Check the three R-representation conditions in order.

    (1) the -1 eigenspaces span V, (2) they pairwise intersect in zero,
    (3) each is one-dimensional.
    """
    if not rep.graph.simply_laced:
        raise UnsupportedGraphError("R-representations are defined here for simply laced graphs only")
    require_relations(rep)
    spaces = {s: minus_eigenspace(rep, s) for s in rep.graph.generators}
    allvecs = [v for s in rep.graph.generators for v in spaces[s]]
    if la.span_dim(allvecs) != rep.dim:
        return RRepCheck(False, 1, "the -1 eigenspaces do not span V")
    for r, t in itertools.combinations(rep.graph.generators, 2):
        if common_minus_vectors(rep, r, t):
            return RRepCheck(False, 2, f"V_{r}^- and V_{t}^- intersect nontrivially")
    for s in rep.graph.generators:
        if len(spaces[s]) != 1:
            return RRepCheck(False, 3, f"dim V_{s}^- = {len(spaces[s])}")
    return RRepCheck(True)
