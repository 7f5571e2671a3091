"""Zeta functions and series Euler characteristics of finite categories.

The pipeline: a finite category (or any square integer matrix) yields an
adjacency matrix A; the pencil E - A z yields three exact polynomials
d, k, m; their degree defects decide the Euler characteristic; the roots
of d turn m/d into partial fractions and hence a closed form for the
zeta function, whose identities are machine-verified against the exact
power series.
"""

from .category import (
    CategoryFormatError,
    FiniteCategory,
    IntMatrix,
    Morphism,
    StructureError,
    ValidationReport,
    adjacency,
    category_from_dict,
    category_to_dict,
    chain_count,
    check_structure,
    discrete,
    disjoint_union,
    enumerate_chains,
    monoid_delooping,
    poset_category,
    product,
    validate,
)
from .charpoly import (
    CharPolyBundle,
    adjsum_poly,
    adjsum_times_a_poly,
    bareiss_det,
    char_poly_bundle,
    degree_defects,
    det_poly,
    monic_charpoly,
    reversal_check,
    reversed_adjsum_poly,
    reversed_det_poly,
    reversed_pencil_polys,
)
from .euler import (
    EulerReport,
    euler_char_of_matrix,
    euler_char_oracle,
    mobius_euler_char,
    series_euler_char,
)
from .poly import RatPoly, binomial, lagrange_interpolate, poly_gcd, squarefree_decompose
from .roots import (
    DEFAULT_PRECISION_BITS,
    DEFAULT_TOLERANCE,
    Root,
    RootFindingError,
    RootSet,
    factor_charpoly,
    numeric_roots,
    rational_roots,
)
from .series import RatSeries, exp_trunc, inv_trunc, log_trunc, mul_trunc
from .zeta import (
    ClosedFormZeta,
    PartialFractionDecomposition,
    SingularityReport,
    SingularPoint,
    VerificationReport,
    ZetaAnalysis,
    ZetaFactor,
    analyze_category,
    analyze_matrix,
    closed_form,
    closed_form_taylor,
    log_derivative_check,
    partial_fractions,
    singularity_report,
    verify_conjecture,
    verify_matrix,
    zeta_series,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
