"""Exception hierarchy shared by every module.

The CLI maps these onto its exit codes, so each class corresponds to one
failure category rather than to a call site.
"""


class LinrsError(Exception):
    """Base class for all library errors."""


class ParameterError(LinrsError, ValueError):
    """Inputs violate a precondition (non-prime p, k > m/e, ...)."""


class BudgetError(LinrsError):
    """An enumeration or table would exceed its configured size cap."""

    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class ConsistencyError(LinrsError):
    """Two computations that must agree did not, or an invariant failed."""


class NumericalError(LinrsError):
    """An iterative floating-point routine failed to converge."""
