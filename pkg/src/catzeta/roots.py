"""Root finding for det(E - A z): exact where possible, certified otherwise.

d(z) is factored as lead * (z - theta_1)^{e_1} ... (z - theta_n)^{e_n}.
Multiplicities always come from exact square-free decomposition; numeric
clustering never decides them.  Rational roots are extracted exactly by
the rational-root theorem; whatever remains is handed, factor by factor,
to an Aberth-Ehrlich simultaneous iteration polished by Newton steps.

Every RootSet is checked by recombination: multiplying the factors back
together must reproduce d, exactly in the all-rational case and to a
small relative coefficient error otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .poly import RatPoly, squarefree_decompose

DEFAULT_PRECISION_BITS = 128
DEFAULT_TOLERANCE = 1e-12


class RootFindingError(ArithmeticError):
    """Numeric root finding failed; carries the best iterates found."""

    def __init__(self, message: str, best: list | None = None):
        super().__init__(message)
        self.best = list(best) if best else []


def to_mpf(x) -> "mp.mpf":
    """Fraction or int to mpf at the current working precision."""
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def to_mpc(x) -> "mp.mpc":
    if isinstance(x, Fraction):
        return mp.mpc(to_mpf(x))
    return mp.mpc(x)


@dataclass(frozen=True)
class Root:
    theta: object        # Fraction when kind == "rational", else mpc
    multiplicity: int
    kind: str            # "rational" or "numeric"


@dataclass(frozen=True)
class RootSet:
    roots: tuple[Root, ...]
    lead: Fraction       # leading coefficient of d
    precision: int       # working binary precision in bits
    degree: int          # deg d = sum of multiplicities

    @property
    def all_rational(self) -> bool:
        return all(r.kind == "rational" for r in self.roots)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def _primitive_int_coeffs(p: RatPoly) -> list[int]:
    denom = math.lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * denom) for c in p.coeffs]
    g = math.gcd(*ints)
    return [c // g for c in ints]


def rational_roots(p: RatPoly) -> tuple[list[tuple[Fraction, int]], RatPoly]:
    """All rational roots of p with multiplicities, plus the deflated cofactor.

    Candidates come from the rational-root theorem applied to the primitive
    integer form; each is divided out to full multiplicity, so the cofactor
    has no rational roots at all.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every number as a root")
    roots: list[tuple[Fraction, int]] = []
    cof = p

    # z = 0 first, so the constant coefficient below is nonzero.
    mult = 0
    while cof.degree >= 1 and cof.coeff(0) == 0:
        cof = cof // RatPoly.monomial(1)
        mult += 1
    if mult:
        roots.append((Fraction(0), mult))

    if cof.degree >= 1:
        ints = _primitive_int_coeffs(cof)
        candidates = sorted(
            {Fraction(sign * num, den)
             for num in _divisors(ints[0]) for den in _divisors(ints[-1])
             for sign in (1, -1)}
        )
        for cand in candidates:
            mult = 0
            while cof.degree >= 1 and cof(cand) == 0:
                cof = cof // RatPoly((-cand, 1))
                mult += 1
            if mult:
                roots.append((cand, mult))
    return roots, cof


def _horner(coeffs: list, x):
    acc = mp.mpc(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def numeric_roots(p: RatPoly, precision_bits: int = DEFAULT_PRECISION_BITS) -> list:
    """All complex roots of a square-free polynomial, as mpc values.

    Aberth-Ehrlich simultaneous iteration from points on a circle inside
    the Cauchy bound, then Newton polishing.  Each returned root theta
    satisfies |p(theta)| <= 2^(-precision_bits/2) max|coeff| max(1,|theta|)^deg;
    failing that raises RootFindingError with the best iterates attached.
    """
    deg = p.degree
    if deg < 1:
        raise ValueError("root finding needs degree >= 1")
    with mp.workprec(precision_bits + 64):
        cs = [to_mpc(c) for c in p.coeffs]
        dcs = [i * cs[i] for i in range(1, len(cs))]
        lead = cs[-1]

        if deg == 1:
            roots = [-cs[0] / cs[1]]
        else:
            radius = 1 + max(abs(c / lead) for c in cs[:-1])
            roots = [
                radius * mp.expjpi(2 * mp.mpf(i) / deg + mp.mpf(1) / (2 * deg))
                for i in range(deg)
            ]
            eps_stop = mp.mpf(2) ** (-(precision_bits + 32))
            converged = False
            for _ in range(500):
                shift_max = mp.mpf(0)
                for i in range(deg):
                    x = roots[i]
                    pv = _horner(cs, x)
                    dv = _horner(dcs, x)
                    if dv == 0:
                        # stalled on a critical point; nudge and retry
                        roots[i] = x + mp.mpf("0.001") * (1 + abs(x))
                        shift_max = max(shift_max, abs(roots[i] - x))
                        continue
                    newton = pv / dv
                    repulse = mp.mpc(0)
                    for j in range(deg):
                        if j != i and roots[j] != x:
                            repulse += 1 / (x - roots[j])
                    denom = 1 - newton * repulse
                    w = newton if denom == 0 else newton / denom
                    roots[i] = x - w
                    shift_max = max(shift_max, abs(w))
                if shift_max <= eps_stop:
                    converged = True
                    break
            if not converged:
                raise RootFindingError(
                    "simultaneous iteration did not converge; raise the precision",
                    best=roots,
                )

        for i in range(deg):
            for _ in range(3):
                dv = _horner(dcs, roots[i])
                if dv == 0:
                    break
                roots[i] = roots[i] - _horner(cs, roots[i]) / dv

        max_coeff = max(abs(c) for c in cs)
        allowed = mp.mpf(2) ** (-(precision_bits // 2)) * max_coeff
        for x in roots:
            if abs(_horner(cs, x)) > allowed * max(mp.mpf(1), abs(x)) ** deg:
                raise RootFindingError(
                    "root residual above certification bound; raise the precision",
                    best=roots,
                )
        return [mp.mpc(x) for x in roots]


def _sort_key(root: Root, precision_bits: int):
    with mp.workprec(precision_bits + 64):
        if root.kind == "rational":
            t = to_mpf(root.theta)
            return (abs(t), mp.pi if t < 0 else mp.mpf(0))
        return (abs(root.theta), mp.arg(root.theta))


def _recombine_exact(rs: RootSet) -> RatPoly:
    prod = RatPoly.constant(rs.lead)
    for root in rs.roots:
        prod = prod * RatPoly((-root.theta, 1)) ** root.multiplicity
    return prod


def _check_recombination(rs: RootSet, d: RatPoly, tol: float) -> None:
    if rs.all_rational:
        if _recombine_exact(rs) != d:
            raise RootFindingError("exact root recombination does not reproduce d")
        return
    with mp.workprec(rs.precision + 64):
        coeffs = [to_mpc(rs.lead)]
        for root in rs.roots:
            theta = to_mpc(root.theta)
            for _ in range(root.multiplicity):
                shifted = [mp.mpc(0)] + coeffs
                coeffs = [shifted[i] - theta * coeffs[i] if i < len(coeffs) else shifted[i]
                          for i in range(len(shifted))]
        err = mp.mpf(0)
        scale = mp.mpf(0)
        for i in range(max(len(coeffs), d.degree + 1)):
            want = to_mpc(d.coeff(i)) if i <= d.degree else mp.mpc(0)
            got = coeffs[i] if i < len(coeffs) else mp.mpc(0)
            err = max(err, abs(got - want))
            scale = max(scale, abs(want))
        if err > tol * scale:
            raise RootFindingError(
                f"recombination residual {mp.nstr(err / scale)} above tolerance; "
                "raise the precision"
            )


def factor_charpoly(d: RatPoly, precision_bits: int = DEFAULT_PRECISION_BITS,
                    tol: float = DEFAULT_TOLERANCE) -> RootSet:
    """Full factorization of d over the complex numbers as a RootSet.

    Multiplicities are read off the square-free decomposition; each
    square-free factor is split into exact rational roots and numeric
    ones.  d(0) must be nonzero (it is 1 for determinant pencils), so
    zero is never a root.
    """
    if d.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if d.coeff(0) == 0:
        raise ValueError("z = 0 must not be a root")
    roots: list[Root] = []
    for factor, mult in squarefree_decompose(d):
        found, cofactor = rational_roots(factor)
        for theta, inner in found:
            if inner != 1:
                raise ArithmeticError("square-free factor with a repeated root")
            roots.append(Root(theta=theta, multiplicity=mult, kind="rational"))
        if cofactor.degree >= 1:
            for theta in numeric_roots(cofactor, precision_bits):
                roots.append(Root(theta=theta, multiplicity=mult, kind="numeric"))
    roots.sort(key=lambda root: _sort_key(root, precision_bits))
    rs = RootSet(roots=tuple(roots), lead=d.lead, precision=precision_bits,
                 degree=max(d.degree, 0))
    if sum(r.multiplicity for r in rs.roots) != rs.degree:
        raise ArithmeticError("multiplicities do not add up to the degree")
    _check_recombination(rs, d, tol)
    return rs
