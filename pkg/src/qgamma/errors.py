"""Typed exceptions: domain violations, poles, and series convergence failures."""


class QGammaError(Exception):
    """Base class for all library errors."""


class DomainError(QGammaError):
    """An argument lies outside an operation's mathematical domain."""


class PoleError(DomainError):
    """Evaluation at (or within tolerance of) a pole of the q-gamma function."""


class ConvergenceError(QGammaError):
    """A series or product could not reach the requested tolerance.

    Carries the best truncation bound actually achieved so callers can decide
    whether a degraded result would have been acceptable.
    """

    def __init__(self, message, achieved_bound=None, terms_used=None):
        super().__init__(message)
        self.achieved_bound = achieved_bound
        self.terms_used = terms_used
