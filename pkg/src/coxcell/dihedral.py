"""
Irreducible representations of the finite dihedral group
D_m = <r, t | r^2 = t^2 = (rt)^m = e>.

Two-dimensional representations rho_k act on the basis (beta_r, beta_t) by

    r: beta_r -> -beta_r,  beta_t -> beta_t + 2cos(k pi/m) beta_r
    t: beta_t -> -beta_t,  beta_r -> beta_r + 2cos(k pi/m) beta_t

and the one-dimensional ones are trivial, sign, eps_r (r -> -1, t -> 1) and
eps_t (r -> 1, t -> -1), the last two only for even m. All matrices live in
Q(zeta_2m).

Kinds are strings: "trivial", "sign", "eps_r", "eps_t", "rho:k".
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .arith import CycloNumber, coerce, scalar_to_json, two_cos
from .errors import PreconditionError, RelationError

ONE_DIM = ("trivial", "sign", "eps_r", "eps_t")
_ONE_DIM_SIGNS = {"trivial": (1, 1), "sign": (-1, -1), "eps_r": (-1, 1), "eps_t": (1, -1)}


def rho(k: int) -> str:
    return f"rho:{k}"


def parse_kind(kind) -> tuple[str, int | None]:
    if isinstance(kind, dict):
        (name, k), = kind.items()
        return str(name), int(k)
    if kind in ONE_DIM:
        return kind, None
    if isinstance(kind, str) and kind.startswith("rho:"):
        return "rho", int(kind[4:])
    raise ValueError(f"unknown dihedral representation kind {kind!r}")


def kind_to_json(kind: str):
    name, k = parse_kind(kind)
    return {"rho": k} if name == "rho" else name


def irreducible_kinds(m: int) -> list[str]:
    """Catalog of the irreducible representations of D_m."""
    kinds = ["trivial", "sign"]
    if m % 2 == 0:
        kinds += ["eps_r", "eps_t"]
    kinds += [rho(k) for k in range(1, (m + 1) // 2) if 2 * k < m]
    return kinds


@dataclass
class DihedralIrrep:
    m: int
    kind: str
    matrices: dict[str, list[list]]

    @property
    def dim(self) -> int:
        return len(self.matrices["r"])

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "kind": kind_to_json(self.kind),
            "matrices": {s: [[scalar_to_json(x) for x in row] for row in M] for s, M in self.matrices.items()},
        }


def irreducible_matrices(m: int, kind: str, conductor: int | None = None) -> DihedralIrrep:
    """Explicit matrices of a dihedral representation over Q(zeta_conductor).

    ``rho:k`` is accepted for 1 <= k <= m/2; rho(m/2) is the reducible
    eps_r + eps_t written in the (beta_r, beta_t) basis.
    """
    if m < 2:
        raise PreconditionError("m must be at least 2")
    N = conductor or 2 * m
    name, k = parse_kind(kind)
    one = CycloNumber.from_rational(1, N)
    zero = CycloNumber.from_rational(0, N)
    if name in ONE_DIM:
        if name in ("eps_r", "eps_t") and m % 2:
            raise PreconditionError(f"{name} exists only for even m (got m = {m})")
        a, b = _ONE_DIM_SIGNS[name]
        return DihedralIrrep(m, name, {"r": [[one * a]], "t": [[one * b]]})
    if not 1 <= k or 2 * k > m:
        raise PreconditionError(f"rho({k}) needs 1 <= k <= m/2 (m = {m})")
    c = two_cos(k, m, N)
    r = [[-one, c], [zero, one]]
    t = [[one, zero], [c, -one]]
    return DihedralIrrep(m, rho(k), {"r": r, "t": t})


def check_dihedral(R, T, m: int) -> str | None:
    """First violated relation among r^2 = t^2 = (rt)^m = 1, or None."""
    n = len(R)
    I = la.identity(n)
    if not la.equal(la.matmul(R, R), I):
        return "r^2 != 1"
    if not la.equal(la.matmul(T, T), I):
        return "t^2 != 1"
    if not la.equal(la.power(la.matmul(R, T), m), I):
        return f"(rt)^{m} != 1"
    return None


def _elements(R, T, m):
    """Matrices of all 2m group elements: rotations (rt)^j and reflections (rt)^j r."""
    RT = la.matmul(R, T)
    rots = [la.identity(len(R), one=R[0][0] * 0 + 1, zero=R[0][0] * 0)]
    for _ in range(m - 1):
        rots.append(la.matmul(rots[-1], RT))
    refls = [la.matmul(X, R) for X in rots]
    return rots + refls


def _common_conductor(mats, m):
    N = 2 * m
    for M in mats:
        for row in M:
            for x in row:
                if isinstance(x, CycloNumber) and not x.is_rational():
                    N = math.lcm(N, x.conductor)
    return N


def _lift(M, N):
    return [[coerce(x, N) for x in row] for row in M]


def decompose(R, T, m: int) -> dict[str, int]:
    """Multiplicities of the irreducibles of D_m in the representation (R, T).

    Uses character inner products over all 2m elements; the characters of the
    irreducibles are computed from their explicit matrices. Characters of D_m
    are real, so no conjugation is needed.
    """
    N = _common_conductor([R, T], m)
    R, T = _lift(R, N), _lift(T, N)
    bad = check_dihedral(R, T, m)
    if bad:
        raise RelationError(f"not a representation of D_{m}: {bad}")
    chi = [la.trace(X) for X in _elements(R, T, m)]
    out = {}
    for kind in irreducible_kinds(m):
        irr = irreducible_matrices(m, kind, N)
        psi = [la.trace(X) for X in _elements(irr.matrices["r"], irr.matrices["t"], m)]
        ip = sum((a * b for a, b in zip(chi, psi)), CycloNumber.from_rational(0, N)) * Fraction(1, 2 * m)
        if not ip.is_rational() or ip.to_rational().denominator != 1 or ip.to_rational() < 0:
            raise ValueError(f"non-integral multiplicity {ip!r} for {kind}: inconsistent input")
        mult = int(ip.to_rational())
        if mult:
            out[kind] = mult
    return out


def cwrt_action(R, T, m: int):
    """Matrix of the q = 1 specialization of C_{w_rt} acting through (R, T).

    C_{w_rt} = w_rt + (-1)^m e + sum_{i=1}^{m-1} (-1)^(m-i) (r_i + t_i)
    where r_i = rtr... and t_i = trt... have i factors.
    """
    bad = check_dihedral(R, T, m)
    if bad:
        raise RelationError(f"not a representation of D_{m}: {bad}")
    n = len(R)
    zero = R[0][0] * 0
    one = zero + 1
    I = la.identity(n, one=one, zero=zero)
    r_i, t_i = I, I
    total = la.scale((-1) ** m, I)
    for i in range(1, m):
        # r_i = r_{i-1}-prefix extended on the right alternately
        r_i = la.matmul(r_i, R if i % 2 == 1 else T)
        t_i = la.matmul(t_i, T if i % 2 == 1 else R)
        total = la.add(total, la.scale((-1) ** (m - i), la.add(r_i, t_i)))
    w = la.matmul(r_i, R if m % 2 == 1 else T)
    return la.add(total, w)
