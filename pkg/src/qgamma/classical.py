"""Classical Euler gamma and digamma references.

euler_gamma uses the Lanczos rational approximation (g=7, 9 coefficients),
accurate to well under 1e-12 relative on (0, 50], so limit comparisons
against the q-gamma attribute their error to the q side. The digamma comes
from the partial-fraction series

    psi(x) = -euler_mascheroni + (x-1) * sum_{k>=0} 1/((k+1)(x+k))

whose tail decays only like 1/N; it exists to validate that formula, not to
be a production digamma, and therefore carries its own looser default policy.
"""

from __future__ import annotations

import math

from . import backend
from .errors import ConvergenceError, DomainError
from .types import TruncationPolicy

# Euler-Mascheroni constant, full binary64 precision; a stored constant,
# never recomputed.
EULER_MASCHERONI = 0.5772156649015329

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# The 1/N tail makes the global 1e-13 default unreachable in any reasonable
# term count, so this series gets its own default tolerance and cap.
DIGAMMA_SERIES_POLICY = TruncationPolicy(epsilon=1e-7, max_terms=100_000_000)


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0 (Lanczos; arguments below 0.5 shift up once)."""
    if not (isinstance(x, (int, float)) and x > 0.0):
        raise DomainError(f"x must be > 0, got {x!r}")
    x = float(x)
    if x < 0.5:
        return log_gamma(x + 1.0) - math.log(x)
    z = x - 1.0
    series = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        series += _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (z + 0.5) * math.log(t) - t + math.log(series)


def euler_gamma(x: float) -> float:
    """Gamma(x) for x > 0, relative accuracy <= 1e-12 on (0, 50]."""
    return math.exp(log_gamma(x))


def euler_digamma_series(
    x: float, policy: TruncationPolicy = DIGAMMA_SERIES_POLICY
) -> float:
    """psi(x) = -euler_mascheroni + (x-1) sum_{k>=0} 1/((k+1)(x+k)), x > 0.

    The tail estimate |x-1|/N governs truncation; the term count targets half
    of policy.epsilon so the realized error clears the tolerance with
    headroom. Raises ConvergenceError (reporting the achievable bound) when
    policy.max_terms would be exceeded, which any epsilon <= 1e-10 does.
    """
    if not (isinstance(x, (int, float)) and x > 0.0):
        raise DomainError(f"x must be > 0, got {x!r}")
    x = float(x)
    if x == 1.0:
        return -EULER_MASCHERONI
    needed = 2.0 * abs(x - 1.0) / policy.epsilon
    if needed > policy.max_terms:
        achieved = abs(x - 1.0) / policy.max_terms
        raise ConvergenceError(
            f"digamma series at x={x!r} needs ~{needed:.3g} terms for "
            f"epsilon={policy.epsilon!r}, above the cap {policy.max_terms} "
            f"(achievable bound {achieved:.3g})",
            achieved_bound=achieved,
            terms_used=0,
        )
    n_terms = max(1, int(math.ceil(needed)))
    partial = backend.kernels.digamma_partial_sum(x, n_terms)
    return -EULER_MASCHERONI + (x - 1.0) * partial
