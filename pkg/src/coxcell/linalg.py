"""
Exact dense linear algebra over Q or a cyclotomic field.

Matrices are lists of rows, vectors are lists. Entries may be ``Fraction`` or
:class:`~coxcell.arith.CycloNumber`; the code only uses field operations and
exact comparison with zero, so there is no tolerance anywhere.

Subspaces are passed around as lists of (column) vectors spanning them.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list]
Vector = list


def zeros(rows: int, cols: int, zero=Fraction(0)) -> Matrix:
    return [[zero] * cols for _ in range(rows)]


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def copy(a: Matrix) -> Matrix:
    return [list(row) for row in a]


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k = shape(a)
    k2, m = shape(b)
    if k != k2:
        raise ValueError(f"shape mismatch {n}x{k} @ {k2}x{m}")
    cols = list(zip(*b)) if b else [()] * m
    out = []
    for row in a:
        nz = [(j, x) for j, x in enumerate(row) if x]
        out.append([sum((x * col[j] for j, x in nz), 0 * row[0] if row else 0) for col in cols])
    return out


def matvec(a: Matrix, v: Vector) -> Vector:
    return [sum((x * y for x, y in zip(row, v) if x and y), 0 * v[0]) for row in a]


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def is_zero(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


def equal(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def power(a: Matrix, k: int) -> Matrix:
    n = len(a)
    result = identity(n, one=_one_like(a), zero=_zero_like(a))
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def trace(a: Matrix):
    return sum((a[i][i] for i in range(len(a))), _zero_like(a))


def direct_sum(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    zero = _zero_like(blocks[0]) if blocks else Fraction(0)
    out = zeros(n, n, zero)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


def _zero_like(a):
    for row in a:
        for x in row:
            return Fraction(0) if isinstance(x, int) else x * 0
    return Fraction(0)


def _one_like(a):
    return _zero_like(a) + 1


# ---------------------------------------------------------------------------
# elimination


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns (Gauss-Jordan, exact).

    Integer entries are promoted to Fraction so that division stays exact.
    """
    m = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in a]
    rows, cols = shape(m)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of {x : a x = 0}, one vector per free column."""
    if not a:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    r, pivots = rref(a)
    n = len(a[0])
    zero = _zero_like(a)
    one = zero + 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def span_basis(vectors: Sequence[Vector]) -> list[Vector]:
    """A basis (as rows of the echelon form) of the span of the vectors."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    r, pivots = rref(vectors)
    return r[: len(pivots)]


def span_dim(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    return rank([list(v) for v in vectors])


def intersection(u: Sequence[Vector], w: Sequence[Vector]) -> list[Vector]:
    """Basis of span(u) & span(w)."""
    if not u or not w:
        return []
    n = len(u[0])
    # solve sum a_i u_i - sum b_j w_j = 0
    cols = [list(x) for x in u] + [[-y for y in x] for x in w]
    system = [[col[i] for col in cols] for i in range(n)]
    out = []
    for sol in nullspace(system):
        vec = [sum((sol[k] * u[k][i] for k in range(len(u))), 0 * u[0][0]) for i in range(n)]
        out.append(vec)
    return span_basis(out)


def solve(a: Matrix, b: Vector) -> Vector | None:
    """One solution of a x = b, or None if inconsistent."""
    n = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    r, pivots = rref(aug)
    if n in pivots:
        return None
    zero = _zero_like(a)
    x = [zero] * n
    for i, p in enumerate(pivots):
        x[p] = r[i][n]
    return x


def coordinates(basis: Sequence[Vector], v: Vector) -> Vector | None:
    """Coordinates of v in the given (independent) basis, or None."""
    a = [[b[i] for b in basis] for i in range(len(v))]
    return solve(a, v)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + [(_one_like(a) if i == j else _zero_like(a)) for j in range(n)] for i, row in enumerate(a)]
    r, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in r]


def extend_to_basis(vectors: Sequence[Vector], n: int) -> list[Vector]:
    """Extend independent vectors by standard basis vectors to a basis of the whole space."""
    zero = _zero_like([list(v) for v in vectors]) if vectors else Fraction(0)
    one = zero + 1
    basis = [list(v) for v in vectors]
    for i in range(n):
        e = [zero] * n
        e[i] = one
        if span_dim(basis + [e]) > len(basis):
            basis.append(e)
    return basis


class EchelonSpan:
    """Incrementally maintained span of vectors, for membership tests."""

    def __init__(self):
        self.rows: list[tuple[int, list]] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Vector) -> Vector:
        v = list(v)
        for p, row in self.rows:
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, v: Vector) -> bool:
        """Add v; return True if it enlarged the span."""
        v = self.reduce(v)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = 1 / v[p]
        v = [x * inv for x in v]
        new_rows = []
        for q, row in self.rows:
            if row[p]:
                f = row[p]
                row = [x - f * y for x, y in zip(row, v)]
            new_rows.append((q, row))
        new_rows.append((p, v))
        self.rows = new_rows
        return True

    def __contains__(self, v: Vector) -> bool:
        return not any(self.reduce(v))
