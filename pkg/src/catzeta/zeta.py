"""The zeta function of a finite category, both ways, and its checks.

One way: zeta_series exponentiates the chain-count generating series
exactly in rational arithmetic.  The other: the logarithmic derivative
of zeta is the rational function m(z)/d(z), so partial fractions over
the roots of d give a closed form

    zeta(z) = prod_k (1 - alpha_k z)^(-beta_{k,0})
              * exp(Q(z) + sum_k sum_{j>=1} beta_{k,j} z^j / (j (1 - alpha_k z)^j))

with alpha_k = 1/theta_k.  Four identities tie the two together and are
machine-checked here: the Taylor match itself, sum of the exponents
beta_{k,0} = N, each 1/theta_k an eigenvalue of A, and an alternating
sum of the beta's equal to the series Euler characteristic.  A final
report classifies each root as a pole, zero or essential singularity.

Everything runs on one of two paths: fully exact rational arithmetic
when every root of d is rational, or high-precision complex arithmetic
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .category import FiniteCategory, IntMatrix, adjacency
from .charpoly import CharPolyBundle, char_poly_bundle, monic_charpoly
from .euler import EulerReport, series_euler_char
from .poly import RatPoly, binomial
from .roots import (
    DEFAULT_PRECISION_BITS,
    DEFAULT_TOLERANCE,
    RootSet,
    factor_charpoly,
    to_mpc,
    to_mpf,
)
from .series import RatSeries, exp_trunc, inv_trunc, mul_trunc

DEFAULT_ORDER = 30
DEFAULT_VERIFY_TOL = 1e-9

_GUARD_BITS = 64


# -- the series side -------------------------------------------------------

def zeta_series(a: IntMatrix, order: int) -> RatSeries:
    """Exact Taylor coefficients of zeta through z**order.

    zeta = exp(sum_{m>=1} c_m z^m / m) where c_m counts composable chains
    of m morphisms, i.e. the total entry sum of A**m.
    """
    if order < 0:
        raise ValueError("series order must be nonnegative")
    log_coeffs = [Fraction(0)] * (order + 1)
    power = IntMatrix.identity(a.n)
    for m in range(1, order + 1):
        power = power @ a
        log_coeffs[m] = Fraction(power.entry_sum(), m)
    return RatSeries(order, exp_trunc(log_coeffs))


def log_derivative_check(a: IntMatrix, order: int) -> bool:
    """True iff the Taylor expansion of m(z)/d(z) through z**(order-1)
    reproduces the chain counts: coefficient of z^t must be the number
    of chains of t+1 morphisms.  Exact rational series division."""
    if order < 1:
        raise ValueError("need at least one coefficient to compare")
    bundle = char_poly_bundle(a)
    dc = [bundle.d.coeff(i) for i in range(order)]
    mc = [bundle.m.coeff(i) for i in range(order)]
    quotient = mul_trunc(mc, inv_trunc(dc))
    power = a
    for t in range(order):
        if quotient[t] != power.entry_sum():
            return False
        power = power @ a
    return True


# -- partial fractions -----------------------------------------------------

@dataclass(frozen=True)
class PartialFractionDecomposition:
    """m(z)/d(z) = q(z) + (1/lead) sum_k sum_j A_{k,j} / (z - theta_k)^j.

    terms[k][j-1] holds A_{k,j} for the k-th root of the root set;
    exact means every coefficient is a Fraction.
    """

    q: RatPoly
    remainder: RatPoly
    lead: Fraction
    rootset: RootSet
    terms: tuple[tuple, ...]
    exact: bool


def _taylor_at(p: RatPoly, center, order: int, zero):
    """Coefficients of p(center + w) in w, through w**order."""
    out = [zero] * (order + 1)
    for i in range(p.degree + 1):
        ci = p.coeff(i)
        if ci == 0:
            continue
        for t in range(min(i, order) + 1):
            out[t] = out[t] + ci * binomial(i, t) * center ** (i - t)
    return out


def _hermite_terms(rem: RatPoly, thetas: list, mults: list[int], one) -> list[tuple]:
    """A_{k,j} for every root: Taylor coefficients at theta_k of
    rem(z) / prod_{l != k} (z - theta_l)^{e_l}, read off in reverse."""
    zero = one * 0
    terms = []
    for k, (theta_k, e_k) in enumerate(zip(thetas, mults)):
        numer = _taylor_at(rem, theta_k, e_k - 1, zero)
        denom = [one] + [zero] * (e_k - 1)
        for l, (theta_l, e_l) in enumerate(zip(thetas, mults)):
            if l == k:
                continue
            shift = theta_k - theta_l
            factor = [binomial(e_l, t) * shift ** (e_l - t) for t in range(e_l + 1)]
            factor = (factor + [zero] * e_k)[:e_k]
            denom = mul_trunc(denom, factor)
        h = mul_trunc(numer, inv_trunc(denom))
        terms.append(tuple(reversed(h)))
    return terms


def partial_fractions(m_poly: RatPoly, d: RatPoly, rootset: RootSet,
                      tol: float = DEFAULT_TOLERANCE) -> PartialFractionDecomposition:
    """Split m/d into quotient plus partial fractions over the given roots.

    The quotient and remainder come from exact polynomial division.  The
    A_{k,j} come from Taylor expansion of the deflated remainder at each
    root (exact for rational roots, working precision otherwise), and the
    decomposition is verified by recombining over the common denominator.
    """
    if d.is_zero():
        raise ValueError("denominator must be nonzero")
    q, rem = divmod(m_poly, d)
    mults = [root.multiplicity for root in rootset.roots]
    exact = rootset.all_rational
    if not rootset.roots:
        if not rem.is_zero():
            raise ArithmeticError("no roots but a nonzero remainder")
        return PartialFractionDecomposition(q=q, remainder=rem, lead=rootset.lead,
                                            rootset=rootset, terms=(), exact=True)
    if exact:
        thetas = [root.theta for root in rootset.roots]
        terms = _hermite_terms(rem, thetas, mults, Fraction(1))
        recombined = RatPoly.zero()
        for k in range(len(thetas)):
            for j in range(1, mults[k] + 1):
                piece = RatPoly.constant(terms[k][j - 1])
                piece = piece * RatPoly((-thetas[k], 1)) ** (mults[k] - j)
                for l in range(len(thetas)):
                    if l != k:
                        piece = piece * RatPoly((-thetas[l], 1)) ** mults[l]
                recombined = recombined + piece
        if recombined != rem:
            raise ArithmeticError("partial fraction recombination failed")
        return PartialFractionDecomposition(q=q, remainder=rem, lead=rootset.lead,
                                            rootset=rootset, terms=tuple(terms),
                                            exact=True)
    with mp.workprec(rootset.precision + _GUARD_BITS):
        thetas = [to_mpc(root.theta) for root in rootset.roots]
        terms = _hermite_terms(rem, thetas, mults, mp.mpc(1))
        # recombine numerically over the common denominator
        degree = sum(mults)
        total = [mp.mpc(0)] * degree
        for k in range(len(thetas)):
            for j in range(1, mults[k] + 1):
                piece = [terms[k][j - 1]]
                for l in range(len(thetas)):
                    reps = (mults[k] - j) if l == k else mults[l]
                    for _ in range(reps):
                        shifted = [mp.mpc(0)] + piece
                        piece = [shifted[t] - thetas[l] * piece[t] if t < len(piece)
                                 else shifted[t] for t in range(len(shifted))]
                for t, c in enumerate(piece):
                    total[t] = total[t] + c
        err = mp.mpf(0)
        scale = max(mp.mpf(1), max(abs(to_mpf(c)) for c in rem.coeffs)
                    if not rem.is_zero() else mp.mpf(0))
        for t in range(degree):
            want = to_mpc(rem.coeff(t)) if t <= rem.degree else mp.mpc(0)
            err = max(err, abs(total[t] - want))
        if err > tol * scale:
            raise ArithmeticError(
                "partial fraction recombination residual above tolerance; "
                "raise the precision"
            )
        return PartialFractionDecomposition(q=q, remainder=rem, lead=rootset.lead,
                                            rootset=rootset, terms=tuple(terms),
                                            exact=False)


# -- closed form -----------------------------------------------------------

@dataclass(frozen=True)
class ZetaFactor:
    """One root's contribution: (1 - alpha z)^(-beta0) and, for repeated
    roots, inner exponential coefficients beta_j for j = 1..e-1."""

    theta: object
    alpha: object
    multiplicity: int
    kind: str
    beta0: object
    betas: tuple


@dataclass(frozen=True)
class ClosedFormZeta:
    q_integral: RatPoly          # Q(z), antiderivative of q, zero constant term
    factors: tuple[ZetaFactor, ...]
    exact: bool
    precision: int


def closed_form(pfd: PartialFractionDecomposition) -> ClosedFormZeta:
    """Assemble the closed form from a partial fraction decomposition.

    beta0 = -A_{k,1}/lead, and for j >= 1

        beta_j = (1/lead) sum_{i=j}^{e-1} C(i-1, j-1) (-1)^{i+1}
                          alpha^{i+j} A_{k,i+1}

    so that the factor and exponential coefficients carry no stray
    normalization; the sum of the beta0 is then exactly N.
    """
    factors = []

    def build(theta, e, kind, terms, lead_inv, one):
        alpha = one / theta
        beta0 = -terms[0] * lead_inv
        betas = []
        for j in range(1, e):
            acc = one * 0
            for i in range(j, e):
                sign = 1 if i % 2 else -1  # (-1)^(i+1)
                acc = acc + sign * binomial(i - 1, j - 1) * alpha ** (i + j) * terms[i]
            betas.append(acc * lead_inv)
        return ZetaFactor(theta=theta, alpha=alpha, multiplicity=e, kind=kind,
                          beta0=beta0, betas=tuple(betas))

    if pfd.exact:
        lead_inv = 1 / Fraction(pfd.lead)
        for root, terms in zip(pfd.rootset.roots, pfd.terms):
            factors.append(build(root.theta, root.multiplicity, root.kind,
                                 terms, lead_inv, Fraction(1)))
    else:
        with mp.workprec(pfd.rootset.precision + _GUARD_BITS):
            lead_inv = 1 / to_mpc(pfd.lead)
            for root, terms in zip(pfd.rootset.roots, pfd.terms):
                factors.append(build(to_mpc(root.theta), root.multiplicity,
                                     root.kind, terms, lead_inv, mp.mpc(1)))
    return ClosedFormZeta(q_integral=pfd.q.antiderivative(), factors=tuple(factors),
                          exact=pfd.exact, precision=pfd.rootset.precision)


def _binomial_factor_coeffs(alpha, beta0, order: int, one) -> list:
    """Taylor coefficients of (1 - alpha z)^(-beta0)."""
    out = [one]
    c = one
    for n in range(1, order + 1):
        c = c * alpha * (beta0 + (n - 1)) / n
        out.append(c)
    return out


def _assemble_taylor(cf: ClosedFormZeta, order: int, one) -> list:
    exponent = [one * 0 + cf.q_integral.coeff(i) for i in range(order + 1)]
    for factor in cf.factors:
        for j, beta in enumerate(factor.betas, start=1):
            if beta == 0:
                continue
            apow = one
            for n in range(j, order + 1):
                exponent[n] = exponent[n] + beta * binomial(n - 1, j - 1) * apow / j
                apow = apow * factor.alpha
    out = exp_trunc(exponent)
    for factor in cf.factors:
        out = mul_trunc(out, _binomial_factor_coeffs(factor.alpha, factor.beta0,
                                                     order, one))
    return out


def closed_form_taylor(cf: ClosedFormZeta, order: int) -> list:
    """Taylor coefficients of the closed form through z**order.

    Exact Fractions on the exact path, mpc values otherwise.  The
    constant coefficient is always exactly 1.
    """
    if order < 0:
        raise ValueError("series order must be nonnegative")
    if cf.exact:
        return _assemble_taylor(cf, order, Fraction(1))
    with mp.workprec(cf.precision + _GUARD_BITS):
        return _assemble_taylor(cf, order, mp.mpc(1))


# -- one-stop analysis -----------------------------------------------------

@dataclass(frozen=True)
class ZetaAnalysis:
    matrix: IntMatrix
    bundle: CharPolyBundle
    euler: EulerReport
    rootset: RootSet
    pfd: PartialFractionDecomposition
    closed: ClosedFormZeta

    @property
    def path(self) -> str:
        return "exact" if self.closed.exact else "numeric"


def analyze_matrix(a: IntMatrix,
                   precision_bits: int = DEFAULT_PRECISION_BITS,
                   recombination_tol: float = DEFAULT_TOLERANCE) -> ZetaAnalysis:
    """Everything derived from one adjacency matrix, computed once."""
    bundle = char_poly_bundle(a)
    euler = series_euler_char(bundle)
    rootset = factor_charpoly(bundle.d, precision_bits, recombination_tol)
    pfd = partial_fractions(bundle.m, bundle.d, rootset, recombination_tol)
    cf = closed_form(pfd)
    return ZetaAnalysis(matrix=a, bundle=bundle, euler=euler, rootset=rootset,
                        pfd=pfd, closed=cf)


def analyze_category(c: FiniteCategory,
                     precision_bits: int = DEFAULT_PRECISION_BITS,
                     recombination_tol: float = DEFAULT_TOLERANCE) -> ZetaAnalysis:
    return analyze_matrix(adjacency(c), precision_bits, recombination_tol)


# -- verification of the four identities -----------------------------------

@dataclass(frozen=True)
class VerificationReport:
    """Residuals and pass flags for the four closed-form identities.

    Flags are None where an identity does not apply (the exponent-sum and
    alternating-sum identities need the Euler characteristic to exist).
    The overall flag ignores inapplicable parts.
    """

    n: int
    order: int
    tolerance: float
    precision: int
    path: str
    chi_exists: bool
    chi: Fraction | None
    c1_max_rel_err: object
    c1_pass: bool
    c2_applicable: bool
    c2_sum: object
    c2_residual: object
    c2_pass: bool | None
    c3_residuals: tuple
    c3_scales: tuple
    c3_pass: bool
    c4_applicable: bool
    c4_value: object
    c4_target: Fraction | None
    c4_residual: object
    c4_imag: object
    c4_pass: bool | None

    @property
    def passed(self) -> bool:
        return all(flag is not False
                   for flag in (self.c1_pass, self.c2_pass, self.c3_pass, self.c4_pass))


def _c4_sum(factors, one):
    acc = one * 0
    for f in factors:
        betas = (f.beta0,) + f.betas
        for j, beta in enumerate(betas):
            sign = -1 if j % 2 else 1
            acc = acc + sign * beta / f.alpha ** (j + 1)
    return acc


def verify_matrix(a: IntMatrix, order: int = DEFAULT_ORDER,
                  tolerance: float = DEFAULT_VERIFY_TOL,
                  precision_bits: int = DEFAULT_PRECISION_BITS) -> VerificationReport:
    """Run all four identity checks on one adjacency matrix."""
    analysis = analyze_matrix(a, precision_bits)
    series = zeta_series(a, order)
    taylor = closed_form_taylor(analysis.closed, order)
    cf = analysis.closed
    euler = analysis.euler
    n = a.n
    applicable = euler.exists
    cp = monic_charpoly(analysis.bundle.d, n)

    if cf.exact:
        c1_err = max(
            (abs(taylor[i] - series.coeff(i)) / max(Fraction(1), abs(series.coeff(i)))
             for i in range(order + 1)),
            default=Fraction(0),
        )
        c1_pass = c1_err == 0
        c2_sum = sum((f.beta0 for f in cf.factors), Fraction(0))
        c2_residual = abs(c2_sum - n)
        c2_pass = (c2_residual == 0) if applicable else None
        residuals, scales = [], []
        for f in cf.factors:
            x = f.alpha
            residuals.append(abs(cp(x)))
            scales.append(sum(abs(c) for c in cp.coeffs) * max(Fraction(1), abs(x)) ** cp.degree)
        c3_pass = all(res == 0 for res in residuals)
        c4_value = _c4_sum(cf.factors, Fraction(1))
        c4_target = euler.chi
        c4_residual = abs(c4_value - c4_target) if applicable else None
        c4_imag = Fraction(0)
        c4_pass = (c4_residual == 0) if applicable else None
        path = "exact"
    else:
        with mp.workprec(precision_bits + _GUARD_BITS):
            c1_err = mp.mpf(0)
            for i in range(order + 1):
                want = series.coeff(i)
                got = taylor[i]
                denom = max(mp.mpf(1), to_mpf(abs(want)))
                c1_err = max(c1_err, abs(got - to_mpc(want)) / denom)
            c1_pass = bool(c1_err <= tolerance)
            c2_sum = sum((f.beta0 for f in cf.factors), mp.mpc(0))
            c2_residual = abs(c2_sum - n)
            c2_pass = bool(c2_residual <= tolerance) if applicable else None
            residuals, scales = [], []
            c3_pass = True
            coeff_sum = sum(to_mpf(abs(c)) for c in cp.coeffs)
            for f, root in zip(cf.factors, analysis.rootset.roots):
                if root.kind == "rational":
                    # exact evaluation stays available for rational roots
                    exact_res = abs(cp(1 / root.theta))
                    res = to_mpf(exact_res)
                    ok = exact_res == 0
                else:
                    res = abs(cp(f.alpha))
                    ok = res <= tolerance * coeff_sum * max(mp.mpf(1), abs(f.alpha)) ** cp.degree
                residuals.append(res)
                scales.append(coeff_sum * max(mp.mpf(1), abs(f.alpha)) ** cp.degree)
                if not ok:
                    c3_pass = False
            c4_value = _c4_sum(cf.factors, mp.mpc(1))
            c4_target = euler.chi
            c4_residual = abs(c4_value - to_mpc(c4_target)) if applicable else None
            c4_imag = abs(c4_value.imag)
            c4_pass = (bool(c4_residual <= tolerance and c4_imag <= tolerance)
                       if applicable else None)
            path = "numeric"

    return VerificationReport(
        n=n, order=order, tolerance=tolerance, precision=precision_bits, path=path,
        chi_exists=euler.exists, chi=euler.chi,
        c1_max_rel_err=c1_err, c1_pass=c1_pass,
        c2_applicable=applicable, c2_sum=c2_sum, c2_residual=c2_residual,
        c2_pass=c2_pass,
        c3_residuals=tuple(residuals), c3_scales=tuple(scales), c3_pass=c3_pass,
        c4_applicable=applicable, c4_value=c4_value, c4_target=c4_target,
        c4_residual=c4_residual, c4_imag=c4_imag, c4_pass=c4_pass,
    )


def verify_conjecture(c: FiniteCategory, order: int = DEFAULT_ORDER,
                      tolerance: float = DEFAULT_VERIFY_TOL,
                      precision_bits: int = DEFAULT_PRECISION_BITS) -> VerificationReport:
    """Run all four identity checks on a finite category."""
    return verify_matrix(adjacency(c), order, tolerance, precision_bits)


# -- singularity classification --------------------------------------------

@dataclass(frozen=True)
class SingularPoint:
    theta: object
    multiplicity: int
    kind: str             # root kind: "rational" or "numeric"
    beta0: object
    classification: str   # "pole", "zero", "essential" or "violation"
    essential: bool       # nonzero inner exponential coefficients present
    pole_order: int | None


@dataclass(frozen=True)
class SingularityReport:
    points: tuple[SingularPoint, ...]
    violations: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def singularity_report(cf: ClosedFormZeta, rootset: RootSet,
                       tol: float = DEFAULT_VERIFY_TOL) -> SingularityReport:
    """Classify every root of d as a singular point or zero of zeta.

    A root with beta0 of positive real part is a pole-type singularity,
    negative real part a zero, and nonzero inner coefficients mark an
    essential singularity.  A root where every coefficient vanishes
    would contradict the root/singularity correspondence, so it is
    flagged as a violation rather than silently accepted.
    """
    points = []
    violations = []
    for idx, (root, factor) in enumerate(zip(rootset.roots, cf.factors)):
        beta0 = factor.beta0
        if cf.exact:
            beta0_zero = beta0 == 0
            essential = any(b != 0 for b in factor.betas)
            re = beta0
            is_integer = isinstance(beta0, Fraction) and beta0.denominator == 1
        else:
            beta0_zero = abs(beta0) <= tol
            essential = any(abs(b) > tol for b in factor.betas)
            re = beta0.real
            is_integer = abs(beta0.imag) <= tol and abs(re - mp.nint(re)) <= tol
        if beta0_zero:
            classification = "essential" if essential else "violation"
        elif re > 0:
            classification = "pole"
        elif re < 0:
            classification = "zero"
        else:
            classification = "essential"
        pole_order = None
        if classification == "pole" and is_integer:
            pole_order = int(beta0) if cf.exact else int(mp.nint(re))
        if classification == "violation":
            violations.append(idx)
        points.append(SingularPoint(theta=root.theta, multiplicity=root.multiplicity,
                                    kind=root.kind, beta0=beta0,
                                    classification=classification,
                                    essential=essential, pole_order=pole_order))
    return SingularityReport(points=tuple(points), violations=tuple(violations))
