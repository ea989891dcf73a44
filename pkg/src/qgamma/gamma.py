"""Jackson's q-gamma function on both branches, and the q-digamma series.

For 0 < q < 1:

    qgamma(x) = (q;q)_inf / (q^x;q)_inf * (1-q)^(1-x)

and for q > 1, with p = 1/q and the real binomial exponent x(x-1)/2:

    qgamma(x) = (p;p)_inf / (p^x;p)_inf * (q-1)^(1-x) * q^(x(x-1)/2)

Both are assembled entirely in log space from the q-Pochhammer evaluations
in qseries. The q-digamma is the logarithmic derivative

    d/dy log qgamma(y) = -log(1-q) + log(q) * sum_{n>=0} q^(y+n)/(1-q^(y+n))

for the q<1 branch.
"""

from __future__ import annotations

import functools
import math

from .errors import DomainError, PoleError
from .qseries import _geometric_series_raw, _log_qpochhammer_raw, _require_base
from .types import Branch, DEFAULT_POLICY, EvalResult, QParameter, TruncationPolicy

# Absolute distance from {0, -1, -2, ...} below which evaluation is refused.
# Grid callers pass exact values; anything closer than this would only produce
# catastrophically cancelled garbage.
POLE_TOLERANCE = 1e-12


def _check_argument(x: float) -> None:
    if not (isinstance(x, (int, float)) and math.isfinite(x)):
        raise DomainError(f"x must be a finite real, got {x!r}")
    if x <= 0.5:
        nearest = round(x)
        if nearest <= 0 and abs(x - nearest) <= POLE_TOLERANCE:
            raise PoleError(
                f"x={x!r} is within {POLE_TOLERANCE} of the pole at {int(nearest)}"
            )


@functools.lru_cache(maxsize=512)
def _log_base_pochhammer(base: float, epsilon: float, max_terms: int):
    """log (base;base)_inf, cached: every evaluation at the same q reuses it."""
    return _log_qpochhammer_raw(base, base, epsilon, max_terms)


def _log_shifted_pochhammer(shift: float, base: float, epsilon: float, max_terms: int):
    """(sign, log|value|, tail_bound, terms) for (base^shift; base)_inf.

    For shift <= 0 the leading factors 1 - base^(shift+n) are not in (0,1);
    they are split off one by one (tracking the sign) until the remaining
    product has its first argument inside (0,1).
    """
    sign = 1.0
    lead = 0.0
    lead_terms = 0
    m = 0
    if shift <= 0.0:
        m = int(math.floor(-shift)) + 1
        for n in range(m):
            factor = 1.0 - base ** (shift + n)
            if factor < 0.0:
                sign = -sign
            lead += math.log(abs(factor))
            lead_terms += 1
    log_rest, bound, terms = _log_qpochhammer_raw(
        base ** (shift + m), base, epsilon, max_terms
    )
    return sign, lead + log_rest, bound, terms + lead_terms


def _signed_result(sign: float, log_mag: float, bound: float, terms: int) -> EvalResult:
    value = sign * math.exp(log_mag)
    return EvalResult(
        value=value,
        log_value=log_mag,
        error_bound=bound,
        terms_used=terms,
        log_defined=sign > 0.0,
    )


def qgamma_lt1(
    x: float, q_param: QParameter, policy: TruncationPolicy = DEFAULT_POLICY
) -> EvalResult:
    """qgamma(x) on the 0 < q < 1 branch.

    log_value = log (q;q)_inf - log (q^x;q)_inf + (1-x) log(1-q). Poles at
    x in {0, -1, -2, ...} raise PoleError (tolerance POLE_TOLERANCE);
    negative non-pole x is supported best-effort with the sign carried on
    value and log_defined cleared when the result is negative.
    """
    if q_param.branch is not Branch.LESS_THAN_ONE:
        raise DomainError("qgamma_lt1 requires the q<1 branch")
    _check_argument(x)
    q = q_param.q
    _require_base(q)
    x = float(x)
    lqq, b1, t1 = _log_base_pochhammer(q, policy.epsilon, policy.max_terms)
    sign, lx, b2, t2 = _log_shifted_pochhammer(x, q, policy.epsilon, policy.max_terms)
    log_mag = lqq - lx + (1.0 - x) * math.log1p(-q)
    return _signed_result(sign, log_mag, b1 + b2, t1 + t2)


def qgamma_gt1(
    x: float, q_param: QParameter, policy: TruncationPolicy = DEFAULT_POLICY
) -> EvalResult:
    """qgamma(x) on the q > 1 branch.

    Delegates the two products to the reciprocal base p = 1/q:
    log_value = log (p;p)_inf - log (p^x;p)_inf
                + (1-x) log(q-1) + x(x-1)/2 * log q.
    """
    if q_param.branch is not Branch.GREATER_THAN_ONE:
        raise DomainError("qgamma_gt1 requires the q>1 branch")
    _check_argument(x)
    p = q_param.product_base
    _require_base(p)
    x = float(x)
    q = q_param.q
    lpp, b1, t1 = _log_base_pochhammer(p, policy.epsilon, policy.max_terms)
    sign, lpx, b2, t2 = _log_shifted_pochhammer(x, p, policy.epsilon, policy.max_terms)
    log_mag = (
        lpp
        - lpx
        + (1.0 - x) * math.log(q - 1.0)
        + 0.5 * x * (x - 1.0) * math.log(q)
    )
    return _signed_result(sign, log_mag, b1 + b2, t1 + t2)


def qgamma(
    x: float, q_param: QParameter, policy: TruncationPolicy = DEFAULT_POLICY
) -> EvalResult:
    """Branch-dispatching front end: qgamma_lt1 for q < 1, qgamma_gt1 for q > 1."""
    if q_param.branch is Branch.LESS_THAN_ONE:
        return qgamma_lt1(x, q_param, policy)
    return qgamma_gt1(x, q_param, policy)


def qdigamma(
    y: float, q_param: QParameter, policy: TruncationPolicy = DEFAULT_POLICY
) -> float:
    """d/dy log qgamma(y) for y > 0 on the q < 1 branch.

    Evaluates -log(1-q) + log(q) * S(y) with S the geometric tail sum at
    shift y. Chain-rule factors for composite arguments (for example y = 1+ax
    differentiated in x) belong to the caller.
    """
    if q_param.branch is not Branch.LESS_THAN_ONE:
        raise DomainError("qdigamma requires the q<1 branch")
    if not (isinstance(y, (int, float)) and y > 0.0):
        raise DomainError(f"y must be > 0, got {y!r}")
    q = q_param.q
    _require_base(q)
    total, _bound, _terms = _geometric_series_raw(
        float(y), q, policy.epsilon, policy.max_terms
    )
    return -math.log1p(-q) + math.log(q) * total
