"""Fast rational-polynomial approximations to the standard normal quantile.

The package provides two composed evaluators built from low-degree rational
minimax fits — ``inv_cdf_rat22a`` (accurate to 2.5e-5 everywhere) and
``inv_cdf_rat22b`` (faster, 1.16e-4) — together with classic published
baselines, a high-precision verification oracle, dense error-scanning and
equioscillation analysis, and a throughput benchmark harness. See the
README for the full tour; the command-line entry point is ``norminv``.
"""

from .analysis import (
    ErrorReport,
    Extremum,
    acceptance_grid,
    find_alternation_points,
    scan_max_abs_error,
    vallee_poussin_bracket,
    verify_equioscillation,
)
from .baselines import (
    AS_IMPROVED,
    AsImprovedCoefficients,
    as_improved,
    as_original,
    beasley_springer,
)
from .bench import BenchResult, run_benchmark
from .coefficients import (
    CENTRAL_NARROW,
    CENTRAL_WIDE,
    COEFFICIENT_SETS,
    TAIL_3_2,
    RationalCoefficients,
)
from .errors import ConvergenceError, DomainError, NormInvError, SaturationWarning
from .oracle import (
    OracleResult,
    inv_cdf_oracle,
    norm_cdf_hp,
    normal_pdf,
    oracle_values,
)
from .quantile import (
    HARD_FLOOR,
    NARROW_PARTITION,
    WIDE_PARTITION,
    RegionPartition,
    central_2_2,
    central_2_2_wide,
    inv_cdf_rat22a,
    inv_cdf_rat22b,
    tail_3_2,
)

__version__ = "1.0.0"

__all__ = [
    "__version__",
    # evaluators
    "central_2_2",
    "central_2_2_wide",
    "tail_3_2",
    "inv_cdf_rat22a",
    "inv_cdf_rat22b",
    "RegionPartition",
    "NARROW_PARTITION",
    "WIDE_PARTITION",
    "HARD_FLOOR",
    # baselines
    "as_original",
    "as_improved",
    "beasley_springer",
    "AsImprovedCoefficients",
    "AS_IMPROVED",
    # coefficients
    "RationalCoefficients",
    "COEFFICIENT_SETS",
    "CENTRAL_NARROW",
    "CENTRAL_WIDE",
    "TAIL_3_2",
    # oracle
    "norm_cdf_hp",
    "normal_pdf",
    "inv_cdf_oracle",
    "oracle_values",
    "OracleResult",
    # analysis
    "acceptance_grid",
    "scan_max_abs_error",
    "find_alternation_points",
    "verify_equioscillation",
    "vallee_poussin_bracket",
    "ErrorReport",
    "Extremum",
    # bench
    "run_benchmark",
    "BenchResult",
    # errors
    "NormInvError",
    "DomainError",
    "ConvergenceError",
    "SaturationWarning",
]
