"""q-Pochhammer infinite product and geometric-tail series with certified truncation.

Everything else in the library reduces to these two evaluations. Both run
until an explicit geometric tail bound clears the policy tolerance, and both
report that bound, so callers get an a-posteriori error certificate along
with the value.
"""

from __future__ import annotations

import math

from . import backend
from .errors import ConvergenceError, DomainError
from .types import Branch, DEFAULT_POLICY, EvalResult, QParameter, TruncationPolicy

# Supported product-base range for the default policy. Above the maximum the
# term count and accumulated rounding swamp the default tolerance, so series
# evaluation refuses to proceed rather than silently degrade.
SUPPORTED_BASE_MIN = 1e-9
SUPPORTED_BASE_MAX = 0.9999


def _require_base(q: float) -> None:
    if not (isinstance(q, float) and 0.0 < q < 1.0):
        raise DomainError(f"product base must lie in (0,1), got {q!r}")
    if q > SUPPORTED_BASE_MAX:
        raise ConvergenceError(
            f"base q={q!r} exceeds the supported maximum {SUPPORTED_BASE_MAX}; "
            "series evaluation would degrade beyond the requested tolerance"
        )


def _log_qpochhammer_raw(a: float, q: float, epsilon: float, max_terms: int):
    """log (a;q)_inf for |a|q < 1, a < 1. Returns (log_value, tail_bound, terms)."""
    log_value, bound, terms, status = backend.kernels.log_qpochhammer(
        a, q, epsilon, max_terms
    )
    if status != backend.STATUS_OK:
        raise ConvergenceError(
            f"(a;q)_inf with a={a!r}, q={q!r} did not reach tolerance {epsilon!r} "
            f"within {max_terms} terms (achieved bound {bound:.3g})",
            achieved_bound=bound,
            terms_used=terms,
        )
    return log_value, bound, terms


def _geometric_series_raw(shift: float, q: float, epsilon: float, max_terms: int):
    """sum_{n>=0} q^(shift+n)/(1-q^(shift+n)). Returns (sum, tail_bound, terms)."""
    total, bound, terms, status = backend.kernels.geometric_series(
        shift, q, epsilon, max_terms
    )
    if status != backend.STATUS_OK:
        raise ConvergenceError(
            f"geometric tail sum with shift={shift!r}, q={q!r} did not reach "
            f"tolerance {epsilon!r} within {max_terms} terms "
            f"(achieved bound {bound:.3g})",
            achieved_bound=bound,
            terms_used=terms,
        )
    return total, bound, terms


def qpochhammer_inf(
    a: float, q_param: QParameter, policy: TruncationPolicy = DEFAULT_POLICY
) -> EvalResult:
    """(a;q)_inf = prod_{n>=0} (1 - a q^n), evaluated in log space.

    The factors approach 1 geometrically, so the product is accumulated as
    sum of log1p(-a q^n) and truncated at the first N where the tail bound
    |a| q^N / ((1-q)(1-|a| q^N)) falls below policy.epsilon; error_bound
    carries that bound (it bounds log_value).

    Only the q<1 branch carries a product base directly; q>1 callers must
    pass the reciprocal base themselves. a = 1 is the one legitimate zero of
    the product and yields value 0.0 with log_defined False rather than an
    error, so upstream pole detection can consume it.
    """
    if q_param.branch is not Branch.LESS_THAN_ONE:
        raise DomainError(
            "qpochhammer_inf requires the q<1 branch; pass the reciprocal base "
            "explicitly when working with q > 1"
        )
    q = q_param.q
    _require_base(q)
    if not (isinstance(a, (int, float)) and math.isfinite(a)):
        raise DomainError(f"a must be a finite real, got {a!r}")
    a = float(a)
    if a > 1.0:
        raise DomainError(f"a must satisfy a <= 1, got {a!r}")
    if not abs(a) * q < 1.0:
        raise DomainError(f"|a| must be < 1/q = {1.0 / q!r}, got {a!r}")
    if a == 1.0:
        return EvalResult(
            value=0.0,
            log_value=math.nan,
            error_bound=0.0,
            terms_used=1,
            log_defined=False,
        )
    log_value, bound, terms = _log_qpochhammer_raw(a, q, policy.epsilon, policy.max_terms)
    return EvalResult(
        value=math.exp(log_value),
        log_value=log_value,
        error_bound=bound,
        terms_used=terms,
    )


def geometric_tail_sum(
    x_shift: float, q_param: QParameter, policy: TruncationPolicy = DEFAULT_POLICY
) -> EvalResult:
    """sum_{n>=0} q^(x_shift+n) / (1 - q^(x_shift+n)) for 0 < q < 1, x_shift > 0.

    Truncates at the first N with tail bound
    q^(x_shift+N) / ((1-q)(1-q^(x_shift+N))) below policy.epsilon;
    error_bound carries that bound (it bounds the sum itself). The sum is
    strictly decreasing in x_shift.
    """
    if q_param.branch is not Branch.LESS_THAN_ONE:
        raise DomainError("geometric_tail_sum requires the q<1 branch")
    q = q_param.q
    _require_base(q)
    if not (isinstance(x_shift, (int, float)) and x_shift > 0.0):
        raise DomainError(f"x_shift must be > 0, got {x_shift!r}")
    total, bound, terms = _geometric_series_raw(
        float(x_shift), q, policy.epsilon, policy.max_terms
    )
    if total <= 0.0:
        # every term underflowed; the true value is positive but below tiny
        return EvalResult(
            value=0.0,
            log_value=math.nan,
            error_bound=bound,
            terms_used=terms,
            log_defined=False,
        )
    log_value = math.log(total)
    return EvalResult(
        value=math.exp(log_value),
        log_value=log_value,
        error_bound=bound,
        terms_used=terms,
    )
