"""Value types shared by every series and gamma evaluation."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError


class Branch(enum.Enum):
    """Which of the two q-gamma definitions applies."""

    LESS_THAN_ONE = "q<1"
    GREATER_THAN_ONE = "q>1"


@dataclass(frozen=True)
class QParameter:
    """The base q together with its branch.

    The branch must match the value: 0 < q < 1 for LESS_THAN_ONE and q > 1
    for GREATER_THAN_ONE. q = 1 (and anything non-finite) is rejected here,
    so series code never sees it.
    """

    q: float
    branch: Branch

    def __post_init__(self):
        q = self.q
        if not math.isfinite(q):
            raise DomainError(f"q must be finite, got {q!r}")
        if q == 1.0:
            raise DomainError("q = 1 is not a valid base; both branches exclude it")
        if self.branch is Branch.LESS_THAN_ONE and not 0.0 < q < 1.0:
            raise DomainError(f"branch {self.branch.value} requires 0 < q < 1, got {q!r}")
        if self.branch is Branch.GREATER_THAN_ONE and not q > 1.0:
            raise DomainError(f"branch {self.branch.value} requires q > 1, got {q!r}")

    @classmethod
    def from_value(cls, q: float) -> "QParameter":
        """Pick the branch from the value alone."""
        if not isinstance(q, (int, float)) or not math.isfinite(q) or q <= 0.0 or q == 1.0:
            raise DomainError(f"q must lie in (0,1) or (1,inf), got {q!r}")
        branch = Branch.LESS_THAN_ONE if q < 1.0 else Branch.GREATER_THAN_ONE
        return cls(float(q), branch)

    @property
    def product_base(self) -> float:
        """The base actually fed to infinite products: q itself, or 1/q when q > 1."""
        return self.q if self.branch is Branch.LESS_THAN_ONE else 1.0 / self.q


@dataclass(frozen=True)
class TruncationPolicy:
    """Tolerance contract governing every infinite series and product.

    epsilon is the target for the a-posteriori truncation bound; max_terms is
    a hard cap on work. When the cap binds, evaluations raise
    ConvergenceError instead of returning a silently degraded value.
    """

    epsilon: float = 1e-13
    max_terms: int = 10_000_000

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise DomainError(f"epsilon must lie in (0,1), got {self.epsilon!r}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms!r}")


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class EvalResult:
    """A truncated series/product value with its error certificate.

    log_value is the primary representation; value is reconstructed as
    sign * exp(log_value), so exp(log_value) and value never drift apart.
    log_defined is False when the exact result is 0 (no logarithm exists) or
    negative (best-effort sign tracking for negative arguments; log_value
    then holds log|value|).

    error_bound is the truncation tail bound stated by the producing
    operation: a bound on log_value for log-space products, a bound on the
    plain sum for linear-space series.
    """

    value: float
    log_value: float
    error_bound: float
    terms_used: int
    log_defined: bool = True
