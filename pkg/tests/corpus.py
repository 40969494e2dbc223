"""Shared graphs and the representation corpus used across test modules."""
from __future__ import annotations

import random
from fractions import Fraction

from coxcell import dihedral
from coxcell.arith import CycloNumber
from coxcell.coxeter import affine_a, dihedral_graph, type_a, type_d
from coxcell.reps import MatrixRep, conjugate, direct_sum
from coxcell.rrep import RRepSpec, build_Vx, cycle_rep, geometric_rep


def triangle():
    return affine_a(2)


def a3():
    return type_a(3)


def irrep(m, kind):
    irr = dihedral.irreducible_matrices(m, kind)
    return MatrixRep(dihedral_graph(m), irr.matrices, 2 * m)


def dihedral_irreducibles(max_m=8):
    for m in range(2, max_m + 1):
        for kind in dihedral.irreducible_kinds(m):
            yield f"D{m}:{kind}", irrep(m, kind)


def random_invertible(n, conductor, rng):
    from coxcell import linalg as la

    while True:
        P = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        if la.rank(P) == n:
            return P


def random_direct_sums(count=50, seed=7):
    rng = random.Random(seed)
    for i in range(count):
        m = rng.choice([2, 3, 4, 5, 6])
        kinds = dihedral.irreducible_kinds(m)
        parts = [rng.choice(kinds) for _ in range(rng.randint(1, 3))]
        rep = direct_sum(*[irrep(m, k) for k in parts])
        rep = conjugate(rep, random_invertible(rep.dim, rep.conductor, rng))
        yield f"sum{i}:D{m}:{'+'.join(parts)}", rep, m, parts


def cyclotomic_sample():
    return CycloNumber.zeta(3) + 2


VX_SAMPLES = [Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(-3, 5)]


def vx_samples():
    g = triangle()
    for x in VX_SAMPLES + [cyclotomic_sample()]:
        tilde, quo, _ = cycle_rep(g, x)
        yield f"Vx~({x!r})", tilde
        yield f"Vx({x!r})", quo
    g4 = affine_a(3)
    for x in (Fraction(3), Fraction(-1, 2)):
        yield f"A~3 Vx({x})", cycle_rep(g4, x)[1]


def geometric_corpus():
    for name, g in [("A2", type_a(2)), ("A3", type_a(3)), ("D4", type_d(4)), ("A~2", affine_a(2))]:
        yield f"geometric {name}", geometric_rep(g)


def full_corpus():
    """Every representation named by the criterion-equivalence check."""
    out = list(dihedral_irreducibles())
    out += [(name, rep) for name, rep, _, _ in random_direct_sums()]
    out += list(geometric_corpus())
    out += list(vx_samples())
    return out
