"""Truncated formal power series with exact rational coefficients.

A series carries a fixed truncation order K and exactly K+1 coefficients
(z**0 .. z**K).  Combining two series of different orders is an error by
design: silent re-truncation would mask mistakes in the callers.

The low-level kernels (`mul_trunc`, `inv_trunc`, `exp_trunc`, `log_trunc`)
are coefficient-ring agnostic: they only use +, *, / and division by small
integers, so the closed-form evaluator can reuse them with mpmath complex
coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


# -- generic kernels on plain coefficient lists ----------------------------

def mul_trunc(a: Sequence, b: Sequence) -> list:
    """Product of two coefficient lists of equal length, truncated."""
    K = len(a) - 1
    zero = a[0] * 0
    out = [zero] * (K + 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j in range(K + 1 - i):
            cb = b[j]
            if cb == 0:
                continue
            out[i + j] = out[i + j] + ca * cb
    return out


def inv_trunc(a: Sequence) -> list:
    """Multiplicative inverse of a coefficient list; a[0] must be invertible."""
    K = len(a) - 1
    inv0 = 1 / a[0]
    out = [inv0] + [a[0] * 0] * K
    for n in range(1, K + 1):
        acc = a[0] * 0
        for i in range(1, n + 1):
            if a[i] != 0:
                acc = acc + a[i] * out[n - i]
        out[n] = -inv0 * acc
    return out


def exp_trunc(s: Sequence) -> list:
    """exp of a coefficient list with zero constant term.

    Uses the recurrence from (exp s)' = s' * exp s:
        (n+1) g_{n+1} = sum_{i=0..n} (i+1) s_{i+1} g_{n-i}.
    """
    K = len(s) - 1
    zero = s[0] * 0
    out = [zero + 1] + [zero] * K
    for n in range(K):
        acc = zero
        for i in range(n + 1):
            c = s[i + 1]
            if c != 0:
                acc = acc + (i + 1) * c * out[n - i]
        out[n + 1] = acc / (n + 1)
    return out


def log_trunc(s: Sequence) -> list:
    """log of a coefficient list with constant term one (inverse of exp_trunc)."""
    K = len(s) - 1
    zero = s[0] * 0
    out = [zero] * (K + 1)
    for n in range(K):
        acc = (n + 1) * s[n + 1]
        for i in range(n):
            c = s[n - i]
            if c != 0:
                acc = acc - (i + 1) * out[i + 1] * c
        out[n + 1] = acc / (n + 1)
    return out


# -- exact rational wrapper ------------------------------------------------

class RatSeries:
    """Power series truncated at a fixed order K, over the rationals."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Fraction | int]):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != order + 1:
            raise ValueError(
                f"series of order {order} needs {order + 1} coefficients, got {len(cs)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("RatSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "RatSeries":
        return cls(order, (0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "RatSeries":
        return cls(order, (1,) + (0,) * order)

    @classmethod
    def from_poly(cls, p, order: int) -> "RatSeries":
        return cls(order, [p.coeff(i) for i in range(order + 1)])

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"RatSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"

    def _check_order(self, other: "RatSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other: "RatSeries") -> "RatSeries":
        self._check_order(other)
        return RatSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "RatSeries") -> "RatSeries":
        self._check_order(other)
        return RatSeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatSeries(self.order, [c * other for c in self.coeffs])
        self._check_order(other)
        return RatSeries(self.order, mul_trunc(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "RatSeries":
        if self.coeffs[0] == 0:
            raise ValueError("series with zero constant term is not invertible")
        return RatSeries(self.order, inv_trunc(self.coeffs))

    def exp(self) -> "RatSeries":
        if self.coeffs[0] != 0:
            raise ValueError("series exp requires zero constant term")
        return RatSeries(self.order, exp_trunc(self.coeffs))

    def log(self) -> "RatSeries":
        if self.coeffs[0] != 1:
            raise ValueError("series log requires constant term one")
        return RatSeries(self.order, log_trunc(self.coeffs))
