"""Run one experiment and persist its report."""

import logging
from pathlib import Path
from typing import Dict, Optional, Tuple

from ..core.config import get_config
from ..core.run_store import RunStore
from ..models.experiment import ExperimentConfig, Report
from .factory import ExperimentFactory
from .writers import report_files

logger = logging.getLogger(__name__)


def run_experiment(config: ExperimentConfig, out_dir: Optional[str] = None, force: Optional[bool] = None,
                   jobs: Optional[int] = None) -> Tuple[Report, Dict[str, Path]]:
    """Validate, compute and write ``<kind>.csv`` and ``<kind>.json``.

    Parameters are validated and existing outputs checked before any
    computation starts; a failing computation leaves nothing behind.
    """
    settings = get_config().output
    out_dir = out_dir or config.out_dir or settings.out_dir
    force = settings.force if force is None else force
    jobs = jobs or settings.jobs

    experiment = ExperimentFactory.create(config, jobs=jobs)
    with RunStore(out_dir, force=force) as store:
        store.check_writable([f"{experiment.kind}.csv", f"{experiment.kind}.json"])
        logger.info(f"Running {experiment.kind} with {config.params}")
        report = experiment.compute()
        for name, text in report_files(report):
            store.write_text(name, text)
    paths = {name: Path(out_dir) / name for name, _ in report_files(report)}
    return report, paths
