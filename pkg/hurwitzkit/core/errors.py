"""Error taxonomy for HurwitzKit.

Every error carries the process exit code the CLI reports for it:
2 for invalid input, 3 for a failed computation, 4 for a failed
acceptance criterion.
"""

from typing import Any, Optional


class HurwitzKitError(Exception):
    """Base class for all HurwitzKit errors."""

    exit_code = 3

    def __init__(self, message: str, context: Optional[dict] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def __str__(self) -> str:
        if not self.context:
            return self.message
        details = ", ".join(f"{k}={v}" for k, v in sorted(self.context.items()))
        return f"{self.message} ({details})"


class ValidationError(HurwitzKitError):
    """Input rejected before any computation started."""

    exit_code = 2


class ComputationError(HurwitzKitError):
    """A computation could not be completed."""

    exit_code = 3


class SizeLimitError(ComputationError):
    """Group closure grew past the configured size cap."""


class BudgetExceededError(ComputationError):
    """A state, structure or enumeration budget was exceeded."""


class ExactnessError(ComputationError):
    """Modular rank runs kept disagreeing."""


class ChainMapError(ComputationError):
    """A chain-level identity (d∘d = 0, ∂f = f∂, homotopy) failed."""


class SaturationError(ComputationError):
    """Cokernel sampling stayed saturated after the retry cap."""


class ArithmeticCheckError(ComputationError):
    """A curve failed a Jacobian sanity gate."""


class CensusFailure(ComputationError):
    """Too many curves of a census failed."""


class AcceptanceError(HurwitzKitError):
    """An acceptance criterion of `verify` failed."""

    exit_code = 4


def require(condition: Any, message: str, **context) -> None:
    """Raise ValidationError unless condition holds."""
    if not condition:
        raise ValidationError(message, context)
