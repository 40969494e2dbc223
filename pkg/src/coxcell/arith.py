"""
Exact scalars: integer polynomials in q, Laurent polynomials in v = q^(1/2),
and elements of cyclotomic fields Q(zeta_n).

Rationals are plain :class:`fractions.Fraction` objects. Cyclotomic numbers
are stored as residues modulo the n-th cyclotomic polynomial in the power
basis 1, zeta, ..., zeta^(phi(n)-1).
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

from .errors import ConductorMismatch


# ---------------------------------------------------------------------------
# sparse integer polynomials


class _SparsePoly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("_c", "_hash")
    variable = "x"

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for k, a in coeffs.items():
                if a:
                    c[int(k)] = int(a)
        self._check(c)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    def _check(self, c):
        pass

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1):
        return cls({degree: coeff})

    @classmethod
    def const(cls, a: int):
        return cls({0: a})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def coefficient(self, k: int) -> int:
        return self._c.get(k, 0)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if type(other) is type(self):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._c.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, int):
            return type(self)._raw({0: other} if other else {})
        if type(other) is type(self):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for k, a in other._c.items():
            b = c.get(k, 0) + a
            if b:
                c[k] = b
            else:
                c.pop(k, None)
        return type(self)._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({k: -a for k, a in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return type(self)._raw({})
            return type(self)._raw({k: a * other for k, a in self._c.items()})
        if type(other) is not type(self):
            return NotImplemented
        c: dict[int, int] = {}
        for i, a in self._c.items():
            for j, b in other._c.items():
                c[i + j] = c.get(i + j, 0) + a * b
        return type(self)._raw({k: a for k, a in c.items() if a})

    __rmul__ = __mul__

    def shift(self, k: int):
        """Multiply by the k-th power of the variable."""
        return type(self)({e + k: a for e, a in self._c.items()})

    def lowest_degree(self) -> int:
        if not self._c:
            raise ValueError("lowest degree of the zero polynomial")
        return min(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    def evaluate_at_one(self) -> int:
        return sum(self._c.values())

    def __call__(self, x):
        return sum(a * x**k for k, a in self._c.items())

    def to_json(self) -> dict[str, int]:
        return {str(k): a for k, a in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]):
        return cls({int(k): int(a) for k, a in data.items()})

    def __repr__(self):
        if not self._c:
            return "0"
        x = self.variable
        terms = []
        for k, a in sorted(self._c.items()):
            if k == 0:
                mono = ""
            elif k == 1:
                mono = x
            else:
                mono = f"{x}^{k}"
            if not mono:
                terms.append(str(a))
            elif a == 1:
                terms.append(mono)
            elif a == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{a}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


class IntPoly(_SparsePoly):
    """Polynomial in q with integer coefficients (nonnegative exponents)."""

    __slots__ = ()
    variable = "q"

    def _check(self, c):
        if any(k < 0 for k in c):
            raise ValueError("IntPoly exponents must be nonnegative")

    def to_laurent(self) -> LaurentPoly:
        """Embed into Z[v, 1/v] via q = v^2."""
        return LaurentPoly._raw({2 * k: a for k, a in self._c.items()})

    def divmod_monic(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Division with remainder by a monic polynomial."""
        if not divisor or divisor.coefficient(divisor.degree()) != 1:
            raise ValueError("divisor must be monic")
        d = divisor.degree()
        rem = dict(self._c)
        quo: dict[int, int] = {}
        while rem and max(rem) >= d:
            top = max(rem)
            a = rem[top]
            quo[top - d] = a
            for k, b in divisor._c.items():
                e = top - d + k
                val = rem.get(e, 0) - a * b
                if val:
                    rem[e] = val
                else:
                    rem.pop(e, None)
        return IntPoly(quo), IntPoly(rem)


class LaurentPoly(_SparsePoly):
    """Laurent polynomial in v = q^(1/2) with integer coefficients."""

    __slots__ = ()
    variable = "v"

    def bar(self) -> LaurentPoly:
        """The ring involution v -> 1/v."""
        return LaurentPoly._raw({-k: a for k, a in self._c.items()})

    def positive_part(self) -> LaurentPoly:
        return LaurentPoly._raw({k: a for k, a in self._c.items() if k > 0})


V = LaurentPoly({1: 1})
V_INV = LaurentPoly({-1: 1})
ONE = LaurentPoly({0: 1})
ZERO = LaurentPoly()


# ---------------------------------------------------------------------------
# cyclotomic polynomials


@lru_cache(maxsize=None)
def cyclotomic_modulus(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial.

    Obtained by dividing x^n - 1 exactly by the cyclotomic polynomials of all
    proper divisors of n.

    >>> cyclotomic_modulus(6)
    1 - q + q^2
    """
    if n < 1:
        raise ValueError("n must be positive")
    p = IntPoly({n: 1, 0: -1})
    for d in range(1, n):
        if n % d == 0:
            p, r = p.divmod_monic(cyclotomic_modulus(d))
            if r:
                raise ArithmeticError(f"inexact division computing Phi_{n}")
    return p


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


# dense helpers over Q, lowest degree first


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _pdivmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) <= db:
        return [], _trim(a)
    q = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        if c:
            q[i - db] = c
            for j, y in enumerate(b):
                a[i - db + j] -= c * y
    return _trim(q), _trim(a[:db])


@lru_cache(maxsize=None)
def _dense_modulus(n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_modulus(n)
    return tuple(Fraction(phi.coefficient(k)) for k in range(phi.degree() + 1))


def _reduce(p, n):
    mod = _dense_modulus(n)
    d = len(mod) - 1
    p = list(p)
    for i in range(len(p) - 1, d - 1, -1):
        c = p[i]
        if c:
            for j in range(d + 1):
                p[i - d + j] -= c * mod[j]
    p = p[:d] + [Fraction(0)] * max(0, d - len(p))
    return tuple(p[:d])


# ---------------------------------------------------------------------------
# cyclotomic numbers


class CycloNumber:
    """An element of Q(zeta_n) in the power basis modulo Phi_n.

    Arithmetic is defined between numbers of equal conductor and with plain
    rationals (which are treated as constants). Moving to a larger conductor is
    explicit, see :meth:`promote`.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable = ()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        self.coeffs = _reduce([Fraction(c) for c in coeffs], conductor)

    @classmethod
    def _raw(cls, conductor, coeffs):
        obj = cls.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = coeffs
        return obj

    @classmethod
    def from_rational(cls, value, conductor: int) -> CycloNumber:
        return cls(conductor, [Fraction(value)])

    @classmethod
    def zeta(cls, conductor: int, k: int = 1) -> CycloNumber:
        """zeta_n^k for any integer k."""
        k %= conductor
        return cls(conductor, [0] * k + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def promote(self, conductor: int) -> CycloNumber:
        """Image under Q(zeta_n) -> Q(zeta_N), zeta_n -> zeta_N^(N/n)."""
        if conductor % self.conductor:
            raise ConductorMismatch(f"cannot embed conductor {self.conductor} into {conductor}")
        e = conductor // self.conductor
        p = [Fraction(0)] * (e * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            p[i * e] = c
        return CycloNumber(conductor, p)

    def _other(self, other):
        if isinstance(other, CycloNumber):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor mismatch: {self.conductor} vs {other.conductor}"
                )
            return other.coeffs
        if isinstance(other, (int, Rational)):
            out = [Fraction(0)] * len(self.coeffs)
            out[0] = Fraction(other)
            return tuple(out)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycloNumber._raw(self.conductor, tuple(a + b for a, b in zip(self.coeffs, o)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber._raw(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycloNumber._raw(self.conductor, tuple(a - b for a, b in zip(self.coeffs, o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, CycloNumber):
            f = Fraction(other)
            return CycloNumber._raw(self.conductor, tuple(a * f for a in self.coeffs))
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CycloNumber._raw(self.conductor, _reduce(_pmul(list(self.coeffs), list(o)), self.conductor))

    __rmul__ = __mul__

    def inverse(self) -> CycloNumber:
        """Multiplicative inverse by the extended Euclidean algorithm."""
        a = _trim(list(self.coeffs))
        if not a:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        m = list(_dense_modulus(self.conductor))
        # invariant: s * a == r0 (mod m)
        r0, r1 = a, m
        s0, s1 = [Fraction(1)], []
        while r1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # r0 is a nonzero constant since Phi_n is irreducible
        if len(r0) != 1:
            raise ArithmeticError("gcd with the cyclotomic modulus is not constant")
        c = r0[0]
        return CycloNumber(self.conductor, [x / c for x in s0])

    def __truediv__(self, other):
        if isinstance(other, CycloNumber):
            return self * other.inverse()
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNumber.from_rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            if other.conductor != self.conductor:
                return False
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.to_rational() == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.to_rational())
        return hash((self.conductor, self.coeffs))

    def conjugate(self) -> CycloNumber:
        """Complex conjugation zeta -> zeta^(-1)."""
        out = CycloNumber.from_rational(0, self.conductor)
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + CycloNumber.zeta(self.conductor, -i) * c
        return out

    def to_complex(self) -> complex:
        """Numerical value under zeta_n -> exp(2 pi i / n); for display only."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [rational_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> CycloNumber:
        return cls(int(data["conductor"]), [rational_from_json(c) for c in data["coeffs"]])

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"Cyclo{self.conductor}({body})"


def two_cos(k: int, m: int, conductor: int | None = None) -> CycloNumber:
    """2 cos(k pi / m) as zeta^(e k) + zeta^(-e k) with e = conductor / (2m).

    >>> two_cos(1, 3, 6) == 1
    True
    """
    if conductor is None:
        conductor = 2 * m
    if m < 2:
        raise ValueError("m must be at least 2")
    if conductor % (2 * m):
        raise ConductorMismatch(f"conductor {conductor} is not divisible by 2m = {2 * m}")
    e = conductor // (2 * m)
    return CycloNumber.zeta(conductor, e * k) + CycloNumber.zeta(conductor, -e * k)


# ---------------------------------------------------------------------------
# field plumbing shared by the matrix code


def rational_to_json(x) -> str:
    return str(Fraction(x))


def rational_from_json(data) -> Fraction:
    if isinstance(data, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(data, (int, str)):
        return Fraction(data)
    raise ValueError(f"cannot parse rational from {data!r}")


def coerce(value, conductor: int | None):
    """Bring a scalar into Q (conductor None) or into Q(zeta_conductor)."""
    if conductor is None:
        if isinstance(value, CycloNumber):
            return value.to_rational()
        return Fraction(value)
    if isinstance(value, CycloNumber):
        if value.conductor == conductor:
            return value
        if value.is_rational():
            return CycloNumber.from_rational(value.to_rational(), conductor)
        return value.promote(conductor)
    return CycloNumber.from_rational(value, conductor)


def scalar_to_json(x):
    if isinstance(x, CycloNumber):
        return x.to_json()
    return rational_to_json(x)


def scalar_from_json(data, conductor: int | None = None):
    if isinstance(data, Mapping):
        return coerce(CycloNumber.from_json(data), conductor)
    return coerce(rational_from_json(data), conductor)


def parse_scalar(text: str):
    """Parse a command-line scalar: "p/q" or a cyclotomic JSON object."""
    import json

    text = text.strip()
    if text.startswith("{"):
        return CycloNumber.from_json(json.loads(text))
    return Fraction(text)


def conductor_of(value) -> int | None:
    if isinstance(value, CycloNumber) and not value.is_rational():
        return value.conductor
    return None
