"""Core services for HurwitzKit."""

from .config import Config, HurwitzKitConfig, get_config, set_config
from .errors import (
    HurwitzKitError, ValidationError, ComputationError, SizeLimitError,
    BudgetExceededError, ExactnessError, ChainMapError, SaturationError,
    ArithmeticCheckError, CensusFailure, AcceptanceError,
)
from .run_store import RunStore

__all__ = [
    "Config", "HurwitzKitConfig", "get_config", "set_config",
    "HurwitzKitError", "ValidationError", "ComputationError", "SizeLimitError",
    "BudgetExceededError", "ExactnessError", "ChainMapError", "SaturationError",
    "ArithmeticCheckError", "CensusFailure", "AcceptanceError",
    "RunStore",
]
