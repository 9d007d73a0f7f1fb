"""Frobenius polynomials on H^2 of K3 surfaces: validation, reconstruction, height."""

from .cyclotomic import (
    AlgebraicPart,
    SupersingularResult,
    admissible_orders,
    algebraic_part,
    cyclotomic,
    reciprocal_cyclotomic,
    scaled_factor,
    supersingular_exact,
    totient,
)
from .frobenius import (
    DEGREE,
    ROOT_TOLERANCE,
    FrobeniusPolynomial,
    InconsistentInput,
    PowerSums,
    Reconstruction,
    WeilReport,
    coefficients_from_power_sums,
    poly_mul,
    power_sums_from_counts,
    power_sums_of,
    reconstruct_from_power_sums,
    validate_weil,
)
from .newton import (
    INFINITY,
    MAX_HEIGHT,
    HeightClass,
    NewtonPolygon,
    classify_height,
    height_candidates_partial,
    height_slopes,
    height_vertices,
    is_ordinary_from_a1,
    lower_hull,
    newton_polygon,
    polygon_from_points,
    valuation,
)
from .ogus import MIN_ELL, Ogus2Verdict, ogus2_check, rigid_polynomial
