"""Determinant and adjugate-sum polynomials of the pencil E - A z.

For an N x N integer matrix A, three polynomials drive everything else:

    d(z) = det(E - A z)
    k(z) = sum of entries of adj(E - A z)
    m(z) = sum of entries of adj(E - A z) A

All are computed exactly: evaluate at integer points with fraction-free
Bareiss elimination, then interpolate.  Adjugate sums never form the
adjugate itself; they use the rank-one update identities

    sum(adj(M))   = det(M + J) - det(M)        (J the all-ones matrix)
    sum(adj(M) A) = det(M + (A 1) 1^T) - det(M)

m(z) is additionally recomputed from z m(z) = k(z) - N d(z), and the two
routes must agree to the last digit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .category import IntMatrix
from .poly import RatPoly, lagrange_interpolate


def bareiss_det(rows: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination with pivoting."""
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if n == 0:
        return 1
    m = [[int(x) for x in row] for row in rows]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            pivot = next((i for i in range(col + 1, n) if m[i][col] != 0), None)
            if pivot is None:
                return 0
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                # Division is exact at every step; that is Bareiss's point.
                m[i][j] = (m[i][j] * m[col][col] - m[i][col] * m[col][j]) // prev
            m[i][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


def _interpolated(value_at: Callable[[int], int], degree_bound: int) -> RatPoly:
    """Polynomial of degree <= degree_bound from its values at 0..degree_bound."""
    points = [(Fraction(z), Fraction(value_at(z))) for z in range(degree_bound + 1)]
    return lagrange_interpolate(points)


def _pencil_entry(a: IntMatrix, i: int, j: int, z: int) -> int:
    return (1 if i == j else 0) - a[i, j] * z


def det_poly(a: IntMatrix) -> RatPoly:
    """d(z) = det(E - A z), exactly."""
    n = a.n
    if n == 0:
        return RatPoly.one()

    def value_at(z: int) -> int:
        return bareiss_det([[_pencil_entry(a, i, j, z) for j in range(n)] for i in range(n)])

    return _interpolated(value_at, n)


def adjsum_poly(a: IntMatrix) -> RatPoly:
    """k(z) = sum of entries of adj(E - A z), exactly."""
    n = a.n
    if n == 0:
        return RatPoly.zero()

    def value_at(z: int) -> int:
        m = [[_pencil_entry(a, i, j, z) for j in range(n)] for i in range(n)]
        bumped = [[m[i][j] + 1 for j in range(n)] for i in range(n)]
        return bareiss_det(bumped) - bareiss_det(m)

    # The z^N terms of det(M+J) and det(M) cancel, so degree <= N-1; we
    # interpolate with a point to spare and check that they really did.
    k = _interpolated(value_at, n)
    if k.degree > n - 1:
        raise ArithmeticError("adjugate sum exceeded its degree bound")
    return k


def adjsum_times_a_poly(a: IntMatrix, k: RatPoly | None = None,
                        d: RatPoly | None = None) -> RatPoly:
    """m(z) = sum of entries of adj(E - A z) A, exactly, via two routes.

    Route one is the rank-one update determinant; route two divides
    k(z) - N d(z) by z.  Disagreement means the determinant backend is
    broken, and raises.
    """
    n = a.n
    if n == 0:
        return RatPoly.zero()
    row_sums = [sum(a.rows[i]) for i in range(n)]

    def value_at(z: int) -> int:
        m = [[_pencil_entry(a, i, j, z) for j in range(n)] for i in range(n)]
        bumped = [[m[i][j] + row_sums[i] for j in range(n)] for i in range(n)]
        return bareiss_det(bumped) - bareiss_det(m)

    direct = _interpolated(value_at, n)
    if direct.degree > n - 1:
        raise ArithmeticError("adjugate sum exceeded its degree bound")

    if k is None:
        k = adjsum_poly(a)
    if d is None:
        d = det_poly(a)
    shifted = k - d * n
    quot, rem = divmod(shifted, RatPoly.monomial(1))
    if not rem.is_zero():
        raise ArithmeticError("k(z) - N d(z) has a nonzero constant term")
    if quot != direct:
        raise ArithmeticError("the two adjugate-sum-times-A routes disagree")
    return direct


def degree_defects(d: RatPoly, k: RatPoly, n: int) -> tuple[int, int]:
    """(r, s) with r = N - deg d and s = N - 1 - deg k.

    For N = 0 both polynomials degenerate (d = 1, k = 0) and the defects
    are (0, 0) by convention.
    """
    if n == 0:
        return 0, 0
    return n - d.degree, n - 1 - k.degree


@dataclass(frozen=True)
class CharPolyBundle:
    """The three pencil polynomials of one matrix, with degree bookkeeping."""

    n: int
    d: RatPoly
    k: RatPoly
    m: RatPoly
    r: int
    s: int

    @property
    def lead_d(self) -> Fraction:
        """Leading coefficient of d; equals d_{N-r}."""
        return self.d.lead


def char_poly_bundle(a: IntMatrix) -> CharPolyBundle:
    """Compute d, k, m and the degree defects for one adjacency matrix."""
    n = a.n
    d = det_poly(a)
    k = adjsum_poly(a)
    m = adjsum_times_a_poly(a, k=k, d=d)
    r, s = degree_defects(d, k, n)
    return CharPolyBundle(n=n, d=d, k=k, m=m, r=r, s=s)


def monic_charpoly(d: RatPoly, n: int) -> RatPoly:
    """det(t E - A) recovered from d by coefficient reversal.

    d has degree at most N, so the reversal pads with zeros: the
    coefficient of t^j is d_{N-j}.
    """
    return RatPoly([d.coeff(n - j) for j in range(n + 1)])


def reversed_det_poly(d: RatPoly, n: int) -> RatPoly:
    """det(A - E z) = (-1)^N (d_0 z^N + d_1 z^{N-1} + ... + d_N)."""
    sign = -1 if n % 2 else 1
    return RatPoly([sign * d.coeff(n - j) for j in range(n + 1)])


def reversed_adjsum_poly(k: RatPoly, n: int) -> RatPoly:
    """sum adj(A - E z) = (-1)^{N-1} (k_0 z^{N-1} + ... + k_{N-1})."""
    if n == 0:
        return RatPoly.zero()
    sign = 1 if n % 2 else -1
    return RatPoly([sign * k.coeff(n - 1 - j) for j in range(n)])


def reversed_pencil_polys(a: IntMatrix) -> tuple[RatPoly, RatPoly]:
    """det(A - E z) and sum adj(A - E z), computed directly from A.

    Independent of det_poly and adjsum_poly; used to cross-check the
    coefficient-reversal formulas and as an alternative route to the
    series Euler characteristic.
    """
    n = a.n
    if n == 0:
        return RatPoly.one(), RatPoly.zero()

    def rev_entry(i: int, j: int, z: int) -> int:
        return a[i, j] - (z if i == j else 0)

    def det_at(z: int) -> int:
        return bareiss_det([[rev_entry(i, j, z) for j in range(n)] for i in range(n)])

    def adjsum_at(z: int) -> int:
        m = [[rev_entry(i, j, z) for j in range(n)] for i in range(n)]
        bumped = [[m[i][j] + 1 for j in range(n)] for i in range(n)]
        return bareiss_det(bumped) - bareiss_det(m)

    return _interpolated(det_at, n), _interpolated(adjsum_at, n)


def reversal_check(a: IntMatrix, bundle: CharPolyBundle | None = None) -> bool:
    """Recompute det(A - E z) and sum adj(A - E z) directly and compare
    against the coefficient-reversal formulas.  True iff both match."""
    if bundle is None:
        bundle = char_poly_bundle(a)
    n = a.n
    if n == 0:
        return True
    direct_det, direct_adj = reversed_pencil_polys(a)
    return (direct_det == reversed_det_poly(bundle.d, n)
            and direct_adj == reversed_adjsum_poly(bundle.k, n))
