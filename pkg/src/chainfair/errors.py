"""Exception types shared across the package."""


class ChainFairError(Exception):
    """Base class for all package errors."""


class DomainError(ChainFairError, ValueError):
    """An argument lies outside the operation's mathematical domain."""


class ConvergenceError(ChainFairError, RuntimeError):
    """An iterative method failed to reach its tolerance.

    Carries the last iterate and its residual so callers can inspect
    how far the iteration got.
    """

    def __init__(self, message, last=None, residual=None):
        super().__init__(message)
        self.last = last
        self.residual = residual


class FitError(ChainFairError, RuntimeError):
    """Least-squares fitting could not evaluate the model anywhere."""
