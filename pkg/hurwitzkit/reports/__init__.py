"""Experiment orchestration, report files, plots and the acceptance suite."""

from .experiments import Experiment, ALL_EXPERIMENTS, parse_targets
from .factory import ExperimentFactory
from .writers import parse_experiment_text, load_experiment_file, render_csv, render_json, load_report
from .run import run_experiment
from .plots import PLOT_KINDS, plot, render_plot
from .verify import CRITERIA, CriterionResult, run_criteria, verify

__all__ = [
    "Experiment", "ALL_EXPERIMENTS", "parse_targets", "ExperimentFactory",
    "parse_experiment_text", "load_experiment_file", "render_csv", "render_json", "load_report",
    "run_experiment", "PLOT_KINDS", "plot", "render_plot",
    "CRITERIA", "CriterionResult", "run_criteria", "verify",
]
