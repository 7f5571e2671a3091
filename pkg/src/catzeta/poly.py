"""Exact dense univariate polynomials over the rationals.

A polynomial is a tuple of Fraction coefficients, index i holding the
coefficient of z**i, with trailing zeros trimmed.  The zero polynomial is
the empty tuple.  Degrees in this project are bounded by the object count
of a finite category, so the dense representation is deliberate.

Everything here is exact: no floats enter or leave.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


class RatPoly:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def constant(cls, c) -> "RatPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "RatPoly":
        return cls((0,) * degree + (c,))

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        """Coefficient of z**i (zero beyond the degree)."""
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == RatPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({list(self.coeffs)!r})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "RatPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "RatPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RatPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RatPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = RatPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple["RatPoly", "RatPoly"]:
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RatPoly.zero(), self
        quot = [Fraction(0)] * (dq + 1)
        dlead = other.lead
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / dlead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPoly(quot), RatPoly(rem)

    def __floordiv__(self, other) -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "RatPoly":
        return divmod(self, other)[1]

    # -- calculus and evaluation -------------------------------------------

    def derivative(self) -> "RatPoly":
        return RatPoly([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def antiderivative(self) -> "RatPoly":
        """Antiderivative with zero constant term."""
        return RatPoly([Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def __call__(self, x):
        """Horner evaluation; works for Fraction, int, complex and mpmath types."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shifted(self, a) -> "RatPoly":
        """The polynomial p(z + a), exactly."""
        a = Fraction(a)
        out = [Fraction(0)] * max(len(self.coeffs), 1)
        pw = [Fraction(1)]  # coefficients of (z + a)**i
        for c in self.coeffs:
            for j, b in enumerate(pw):
                out[j] += c * b
            nxt = [b * a for b in pw] + [Fraction(0)]
            for j, b in enumerate(pw):
                nxt[j + 1] += b
            pw = nxt
        return RatPoly(out)

    def monic(self) -> "RatPoly":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        inv = 1 / self.lead
        return RatPoly(tuple(c * inv for c in self.coeffs))


def _coerce(x) -> RatPoly:
    if isinstance(x, RatPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return RatPoly.constant(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


def poly_gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_decompose(p: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's square-free decomposition.

    Returns [(f1, m1), (f2, m2), ...] with monic, square-free, pairwise
    coprime factors and strictly increasing multiplicities, such that
    p = lead(p) * product(fi ** mi).  Factors of degree zero are dropped.
    """
    if p.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    p = p.monic()
    if p.degree == 0:
        return []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a - b.derivative()
    out: list[tuple[RatPoly, int]] = []
    mult = 1
    while b.degree > 0:
        f = poly_gcd(b, c) if not c.is_zero() else b.monic()
        if f.degree > 0:
            out.append((f, mult))
        b2 = b // f
        c = c // f - b2.derivative()
        b = b2
        mult += 1
    return out


def lagrange_interpolate(points: Sequence[tuple]) -> RatPoly:
    """The unique polynomial of degree < len(points) through the given points."""
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be pairwise distinct")
    result = RatPoly.zero()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = RatPoly.one()
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = basis * RatPoly((-xj, 1))
            denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside the triangle; C(0, 0) = 1."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)
