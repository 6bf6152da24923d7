"""Experiment factory for HurwitzKit."""

import logging
from typing import Dict, List, Type

from ..core.errors import ValidationError
from ..models.experiment import ExperimentConfig
from .experiments import Experiment

logger = logging.getLogger(__name__)


class ExperimentFactory:
    """Factory for creating experiment runners."""

    _experiment_types: Dict[str, Type[Experiment]] = {}

    @classmethod
    def register(cls, kind: str, experiment_class: Type[Experiment]) -> None:
        """Register an experiment implementation."""
        cls._experiment_types[kind.lower()] = experiment_class

    @classmethod
    def create(cls, config: ExperimentConfig, jobs: int = 1) -> Experiment:
        """Create an experiment runner; parameters are validated here."""
        kind = str(config.kind).lower()

        if kind not in cls._experiment_types:
            raise ValidationError(f"Unknown experiment kind: {kind}")

        return cls._experiment_types[kind](config, jobs=jobs)

    @classmethod
    def get_available_types(cls) -> List[str]:
        """Get list of available experiment kinds."""
        return list(cls._experiment_types.keys())


def _auto_register():
    """Register the built-in experiment kinds."""
    from .experiments import ALL_EXPERIMENTS

    for experiment_class in ALL_EXPERIMENTS:
        ExperimentFactory.register(experiment_class.kind, experiment_class)


_auto_register()
