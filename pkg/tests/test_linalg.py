from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from coxcell import linalg as la
from coxcell.arith import CycloNumber

entries = st.integers(-4, 4)
matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rank_and_kernel_match_sympy(A):
    M = sympy.Matrix(A)
    assert la.rank(A) == M.rank()
    ker = la.nullspace(A)
    assert len(ker) == len(A[0]) - M.rank()
    for v in ker:
        assert all(isinstance(x, Fraction) for x in v)
        assert la.matvec(A, v) == [0] * len(A)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse(A):
    if sympy.Matrix(A).det() == 0:
        return
    assert la.matmul(A, la.inverse(A)) == la.identity(3)
    assert la.inverse(A) == [[Fraction(int(x.p), int(x.q)) for x in row] for row in sympy.Matrix(A).inv().tolist()]


def test_cyclotomic_kernel():
    z = CycloNumber.zeta(3)
    A = [[z, z * z], [1, z]]
    (v,) = la.nullspace(A)
    assert la.matvec(A, v) == [0, 0]


def test_span_helpers():
    u = [[1, 0, 0], [0, 1, 0]]
    w = [[0, 1, 0], [0, 0, 1]]
    (i,) = la.intersection(u, w)
    assert i[0] == 0 and i[2] == 0 and i[1] != 0
    assert la.span_dim(u + w) == 3
    assert len(la.extend_to_basis([[1, 1, 0]], 3)) == 3
    assert la.coordinates([[1, 1], [1, -1]], [3, 1]) == [2, 1]
    span = la.EchelonSpan()
    assert span.add([1, 2]) and not span.add([2, 4])
    assert [3, 6] in span and [0, 1] not in span
