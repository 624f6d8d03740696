"""Exception hierarchy shared by every module."""

from __future__ import annotations


class BentGuideError(Exception):
    """Base class for all package errors."""


class DomainError(BentGuideError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(BentGuideError, RuntimeError):
    """Root bracketing or an iterative refinement did not converge."""


class NumericalError(BentGuideError, ArithmeticError):
    """Quadrature or another numerical kernel failed to reach its tolerance."""
