"""Jackson q-gamma, q-Pochhammer and q-digamma evaluation with certified
truncation bounds, classical gamma/digamma references, and a verification
harness for the gamma-ratio double inequality."""

from .backend import BACKEND
from .classical import (
    DIGAMMA_SERIES_POLICY,
    EULER_MASCHERONI,
    euler_digamma_series,
    euler_gamma,
    log_gamma,
)
from .errors import ConvergenceError, DomainError, PoleError, QGammaError
from .gamma import POLE_TOLERANCE, qdigamma, qgamma, qgamma_gt1, qgamma_lt1
from .inequality import (
    DEFAULT_MARGIN_TOL,
    DEFAULT_SEED,
    DEFAULT_STEP_TOL,
    GridSpec,
    InequalityReport,
    MonotonicityReport,
    PointRecord,
    first_monotonicity_violation,
    gamma_ratio,
    log_gamma_ratio,
    log_gamma_ratio_derivative,
    termwise_gap,
    verify_bounds,
    verify_classical_bounds,
    verify_monotonicity,
)
from .qseries import (
    SUPPORTED_BASE_MAX,
    SUPPORTED_BASE_MIN,
    geometric_tail_sum,
    qpochhammer_inf,
)
from .types import (
    Branch,
    DEFAULT_POLICY,
    EvalResult,
    QParameter,
    TruncationPolicy,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Branch",
    "ConvergenceError",
    "DEFAULT_MARGIN_TOL",
    "DEFAULT_POLICY",
    "DEFAULT_SEED",
    "DEFAULT_STEP_TOL",
    "DIGAMMA_SERIES_POLICY",
    "DomainError",
    "EULER_MASCHERONI",
    "EvalResult",
    "GridSpec",
    "InequalityReport",
    "MonotonicityReport",
    "POLE_TOLERANCE",
    "PointRecord",
    "PoleError",
    "QGammaError",
    "QParameter",
    "SUPPORTED_BASE_MAX",
    "SUPPORTED_BASE_MIN",
    "TruncationPolicy",
    "euler_digamma_series",
    "euler_gamma",
    "first_monotonicity_violation",
    "gamma_ratio",
    "geometric_tail_sum",
    "log_gamma",
    "log_gamma_ratio",
    "log_gamma_ratio_derivative",
    "qdigamma",
    "qgamma",
    "qgamma_gt1",
    "qgamma_lt1",
    "qpochhammer_inf",
    "termwise_gap",
    "verify_bounds",
    "verify_classical_bounds",
    "verify_monotonicity",
]
