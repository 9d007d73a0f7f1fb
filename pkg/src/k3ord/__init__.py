"""Ordinary reduction of quartic K3 surfaces from finite-field point counts."""

from .gf import ExtensionField, FieldElement, PrimeField, make_extension
from .scan import PrimeRecord, ScanConfig, ScanReport, run_scan, summarize
from .surface import (
    BudgetExceeded,
    CountResult,
    DegenerateReduction,
    QuarticSurface,
    count_points_fast,
    count_points_naive,
    is_ordinary,
    reduce_mod_p,
    singular_scan,
)
from .weil import (
    FrobeniusPolynomial,
    classify_height,
    newton_polygon,
    reconstruct_from_power_sums,
    supersingular_exact,
    validate_weil,
)

__version__ = "0.1.0"
