"""
Exception hierarchy for the suploc toolkit.
"""


class SuplocError(Exception):
    """Base class for all toolkit errors."""


class DomainError(SuplocError, ValueError):
    """Argument outside its mathematical domain, or a violated precondition."""


class CensoredPointError(DomainError):
    """A censored local maximum was passed where exact (l, r) are required."""


class InsufficientDataError(SuplocError, ValueError):
    """Too few samples or points for a stable estimate."""


class SolverError(SuplocError, RuntimeError):
    """The least-squares solver did not converge."""

    def __init__(self, message, report=None):
        """
        Initialize solver error.

        Args:
            message: Human readable description
            report: Dict with the residual state at the last iterate
        """
        super().__init__(message)
        self.report = report or {}


class UsageError(SuplocError):
    """Invalid command line or manifest configuration."""
