"""Certification of the gamma-ratio double inequality over parameter grids.

For 0 < q < 1, a >= 1 and x in [0,1] the ratio

    f(x) = qgamma(1+x)^a / qgamma(1+ax)

is bounded by 1/qgamma(1+a) from below and 1 from above, attains the lower
bound at x = 1, and is nonincreasing in x. This module evaluates f, its
logarithm and the derivative of the logarithm, checks the per-term sign
inequality the monotonicity argument rests on, and sweeps grids to produce
margin reports. A classical variant does the same for Euler's gamma, where
the lower bound is 1/Gamma(1+a) (equivalently 1/n! at integer a).

All ratio work happens in log space; values are exponentiated only for
reporting, so large a cannot overflow or underflow intermediates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .classical import log_gamma
from .errors import ConvergenceError, DomainError
from .gamma import qdigamma, qgamma_lt1
from .types import Branch, DEFAULT_POLICY, QParameter, TruncationPolicy

# Default tolerances: series run at 1e-13, so margin checks at 1e-10 and
# monotonicity steps at 1e-12 keep two orders of headroom.
DEFAULT_MARGIN_TOL = 1e-10
DEFAULT_STEP_TOL = 1e-12

# Fixed seed for randomized property sampling, echoed into reports/CSV
# footers for reproducibility.
DEFAULT_SEED = 12345


@dataclass(frozen=True)
class GridSpec:
    """Rectangular (q, a, x) sampling: q in (0,1), a >= 1, and a uniform
    x grid on [0,1] that contains both endpoints exactly."""

    q_values: tuple
    a_values: tuple
    x_count: int

    def __post_init__(self):
        object.__setattr__(self, "q_values", tuple(float(q) for q in self.q_values))
        object.__setattr__(self, "a_values", tuple(float(a) for a in self.a_values))
        if not self.q_values:
            raise DomainError("q_values must be nonempty")
        for q in self.q_values:
            if not (math.isfinite(q) and 0.0 < q < 1.0):
                raise DomainError(f"all q values must lie in (0,1), got {q!r}")
        if not self.a_values:
            raise DomainError("a_values must be nonempty")
        for a in self.a_values:
            if not (math.isfinite(a) and a >= 1.0):
                raise DomainError(f"all a values must satisfy a >= 1, got {a!r}")
        if not (isinstance(self.x_count, int) and self.x_count >= 2):
            raise DomainError(f"x_count must be an integer >= 2, got {self.x_count!r}")

    def x_values(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.x_count)


class PointRecord(NamedTuple):
    """One evaluated grid point with its margins against both bounds."""

    q: float
    a: float
    x: float
    f: float
    lower: float
    upper: float
    lower_margin: float  # f - lower
    upper_margin: float  # upper - f


@dataclass
class InequalityReport:
    """Grid-wide margin summary; pass means both minima clear -tol."""

    tol: float
    points: list
    min_lower_margin: float
    min_upper_margin: float
    argmin_lower: Optional[PointRecord]
    argmin_upper: Optional[PointRecord]
    passed: bool
    lower_attained_at_x1: bool
    max_x1_gap: float
    incomplete: bool = False
    min_factorial_margin: Optional[float] = None


@dataclass(frozen=True)
class MonotonicityViolation:
    q: float
    a: float
    x_prev: float
    x_next: float
    f_prev: float
    f_next: float


@dataclass
class MonotonicityReport:
    passed: bool
    violation: Optional[MonotonicityViolation]
    pairs_checked: int


def _validate_ratio_args(x: float, a: float) -> None:
    if not (isinstance(x, (int, float)) and math.isfinite(x) and x >= 0.0):
        raise DomainError(f"x must be >= 0, got {x!r}")
    if not (isinstance(a, (int, float)) and math.isfinite(a) and a >= 1.0):
        raise DomainError(f"a must be >= 1, got {a!r}")


def log_gamma_ratio(
    x: float, a: float, q_param: QParameter, policy: TruncationPolicy = DEFAULT_POLICY
) -> float:
    """a * log qgamma(1+x) - log qgamma(1+ax)."""
    _validate_ratio_args(x, a)
    return (
        a * qgamma_lt1(1.0 + x, q_param, policy).log_value
        - qgamma_lt1(1.0 + a * x, q_param, policy).log_value
    )


def gamma_ratio(
    x: float, a: float, q_param: QParameter, policy: TruncationPolicy = DEFAULT_POLICY
) -> float:
    """qgamma(1+x)^a / qgamma(1+ax), via exp of log_gamma_ratio."""
    return math.exp(log_gamma_ratio(x, a, q_param, policy))


def log_gamma_ratio_derivative(
    x: float, a: float, q_param: QParameter, policy: TruncationPolicy = DEFAULT_POLICY
) -> float:
    """d/dx of log_gamma_ratio: a*qdigamma(1+x) - a*qdigamma(1+ax).

    The second term carries the chain-rule factor a from differentiating the
    inner 1+ax. Nonpositive (up to series tolerance) for a >= 1, x >= 0.
    """
    _validate_ratio_args(x, a)
    return a * qdigamma(1.0 + x, q_param, policy) - a * qdigamma(
        1.0 + a * x, q_param, policy
    )


def termwise_gap(n: int, x: float, a: float, q: float) -> float:
    """q^(1+ax+n)/(1-q^(1+ax+n)) - q^(1+x+n)/(1-q^(1+x+n)).

    Each such gap is <= 0 in exact arithmetic (the map t -> t/(1-t) is
    increasing and q^(1+ax+n) <= q^(1+x+n)); in floating point it stays
    within a few ulps of the larger term above zero.
    """
    if not (isinstance(n, int) and n >= 0):
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    _validate_ratio_args(x, a)
    if not (isinstance(q, (int, float)) and 0.0 < q < 1.0):
        raise DomainError(f"q must lie in (0,1), got {q!r}")
    t_ax = q ** (1.0 + a * x + n)
    t_x = q ** (1.0 + x + n)
    return t_ax / (1.0 - t_ax) - t_x / (1.0 - t_x)


# ---------------------------------------------------------------------------
# grid sweeps


@dataclass
class _MarginSummary:
    """Associatively mergeable extrema accumulator for grid blocks."""

    min_lower: float = math.inf
    min_upper: float = math.inf
    argmin_lower: Optional[PointRecord] = None
    argmin_upper: Optional[PointRecord] = None
    max_x1_gap: float = 0.0
    min_factorial: float = math.inf

    def merge(self, other: "_MarginSummary") -> "_MarginSummary":
        out = _MarginSummary()
        if self.min_lower <= other.min_lower:
            out.min_lower, out.argmin_lower = self.min_lower, self.argmin_lower
        else:
            out.min_lower, out.argmin_lower = other.min_lower, other.argmin_lower
        if self.min_upper <= other.min_upper:
            out.min_upper, out.argmin_upper = self.min_upper, self.argmin_upper
        else:
            out.min_upper, out.argmin_upper = other.min_upper, other.argmin_upper
        out.max_x1_gap = max(self.max_x1_gap, other.max_x1_gap)
        out.min_factorial = min(self.min_factorial, other.min_factorial)
        return out


def _summarize_block(rows: Sequence[PointRecord], factorial_lower: Optional[float]):
    s = _MarginSummary()
    for rec in rows:
        if rec.lower_margin < s.min_lower:
            s.min_lower, s.argmin_lower = rec.lower_margin, rec
        if rec.upper_margin < s.min_upper:
            s.min_upper, s.argmin_upper = rec.upper_margin, rec
        if rec.x == 1.0:
            s.max_x1_gap = max(s.max_x1_gap, abs(rec.f - rec.lower))
        if factorial_lower is not None:
            s.min_factorial = min(s.min_factorial, rec.f - factorial_lower)
    return s


def _build_report(
    points: list, summary: _MarginSummary, tol: float, incomplete: bool
) -> InequalityReport:
    has_factorial = math.isfinite(summary.min_factorial)
    passed = (
        not incomplete
        and summary.min_lower >= -tol
        and summary.min_upper >= -tol
        and (not has_factorial or summary.min_factorial >= -tol)
    )
    attained = bool(points) and not incomplete and summary.max_x1_gap <= tol
    return InequalityReport(
        tol=tol,
        points=points,
        min_lower_margin=summary.min_lower,
        min_upper_margin=summary.min_upper,
        argmin_lower=summary.argmin_lower,
        argmin_upper=summary.argmin_upper,
        passed=passed,
        lower_attained_at_x1=attained,
        max_x1_gap=summary.max_x1_gap,
        incomplete=incomplete,
        min_factorial_margin=summary.min_factorial if has_factorial else None,
    )


def _qgamma_block(
    q_param: QParameter, a: float, xs: np.ndarray, policy: TruncationPolicy
):
    log_lower = -qgamma_lt1(1.0 + a, q_param, policy).log_value
    lower = math.exp(log_lower)
    rows = []
    for x in xs:
        x = float(x)
        f = math.exp(
            a * qgamma_lt1(1.0 + x, q_param, policy).log_value
            - qgamma_lt1(1.0 + a * x, q_param, policy).log_value
        )
        rows.append(PointRecord(q_param.q, a, x, f, lower, 1.0, f - lower, 1.0 - f))
    return rows


def verify_bounds(
    grid: GridSpec,
    policy: TruncationPolicy = DEFAULT_POLICY,
    tol: float = DEFAULT_MARGIN_TOL,
) -> InequalityReport:
    """Evaluate the ratio at every grid point and certify
    1/qgamma(1+a) - tol <= f(x) <= 1 + tol, recording margins, their argmins
    and whether the x=1 endpoint attains the lower bound within tol.

    A ConvergenceError mid-sweep aborts the sweep and returns the partial
    report flagged incomplete (never passed).
    """
    points: list = []
    summary = _MarginSummary()
    incomplete = False
    xs = grid.x_values()
    try:
        for q in grid.q_values:
            q_param = QParameter(q, Branch.LESS_THAN_ONE)
            for a in grid.a_values:
                rows = _qgamma_block(q_param, a, xs, policy)
                points.extend(rows)
                summary = summary.merge(_summarize_block(rows, None))
    except ConvergenceError:
        incomplete = True
    return _build_report(points, summary, tol, incomplete)


def verify_monotonicity(
    grid: GridSpec,
    policy: TruncationPolicy = DEFAULT_POLICY,
    tol: float = DEFAULT_STEP_TOL,
) -> MonotonicityReport:
    """Check f(x_{i+1}) <= f(x_i) + tol along the x grid for every (q, a);
    stops at the first violation. ConvergenceError propagates."""
    xs = grid.x_values()
    pairs = 0
    for q in grid.q_values:
        q_param = QParameter(q, Branch.LESS_THAN_ONE)
        for a in grid.a_values:
            fs = [gamma_ratio(float(x), a, q_param, policy) for x in xs]
            idx = first_monotonicity_violation(xs, fs, tol)
            pairs += len(fs) - 1
            if idx is not None:
                return MonotonicityReport(
                    passed=False,
                    violation=MonotonicityViolation(
                        q=q,
                        a=a,
                        x_prev=float(xs[idx]),
                        x_next=float(xs[idx + 1]),
                        f_prev=fs[idx],
                        f_next=fs[idx + 1],
                    ),
                    pairs_checked=pairs,
                )
    return MonotonicityReport(passed=True, violation=None, pairs_checked=pairs)


def first_monotonicity_violation(
    x_values: Sequence[float], f_values: Sequence[float], tol: float
) -> Optional[int]:
    """Index i of the first step with f[i+1] > f[i] + tol, or None.

    Pure scan over precomputed values so harness self-tests can feed it
    doctored sequences.
    """
    if len(x_values) != len(f_values):
        raise DomainError("x_values and f_values must have equal length")
    for i in range(len(f_values) - 1):
        if f_values[i + 1] > f_values[i] + tol:
            return i
    return None


def verify_classical_bounds(
    a_values: Sequence[float],
    x_count: int,
    tol: float = DEFAULT_MARGIN_TOL,
) -> InequalityReport:
    """Classical analogue of verify_bounds with Euler's gamma:
    1/Gamma(1+a) <= Gamma(1+x)^a / Gamma(1+ax) <= 1 on x in [0,1], a >= 1.

    For integer a = n the lower bound is additionally checked in its 1/n!
    form (integer factorial, not the gamma approximation); that margin folds
    into passed and is reported as min_factorial_margin. Report rows carry
    q = 1.0, marking the classical (q -> 1) case.
    """
    a_values = tuple(float(a) for a in a_values)
    if not a_values:
        raise DomainError("a_values must be nonempty")
    for a in a_values:
        if not (math.isfinite(a) and a >= 1.0):
            raise DomainError(f"all a values must satisfy a >= 1, got {a!r}")
    if not (isinstance(x_count, int) and x_count >= 2):
        raise DomainError(f"x_count must be an integer >= 2, got {x_count!r}")
    xs = np.linspace(0.0, 1.0, x_count)
    points: list = []
    summary = _MarginSummary()
    for a in a_values:
        lower = math.exp(-log_gamma(1.0 + a))
        factorial_lower = 1.0 / math.factorial(round(a)) if a.is_integer() else None
        rows = []
        for x in xs:
            x = float(x)
            f = math.exp(a * log_gamma(1.0 + x) - log_gamma(1.0 + a * x))
            rows.append(PointRecord(1.0, a, x, f, lower, 1.0, f - lower, 1.0 - f))
        points.extend(rows)
        summary = summary.merge(_summarize_block(rows, factorial_lower))
    return _build_report(points, summary, tol, incomplete=False)
