"""Experiment files in, CSV and JSON reports out."""

import json
import logging
import re
from pathlib import Path
from typing import Any, Dict, List, Tuple

from ..core.errors import ValidationError
from ..models.experiment import ANCHORS, ExperimentConfig, ExperimentKind, Report

logger = logging.getLogger(__name__)

_KEY = re.compile(r"^[A-Za-z_][A-Za-z0-9_.-]*$")
_RESERVED = ("kind", "seed", "out_dir")


def parse_experiment_text(text: str) -> ExperimentConfig:
    """Parse ``key = value`` lines; ``#`` starts a comment, blank lines are skipped."""
    values: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"Line {lineno}: expected 'key = value', got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if not _KEY.match(key):
            raise ValidationError(f"Line {lineno}: bad key {key!r}")
        if key in values:
            raise ValidationError(f"Line {lineno}: duplicate key {key!r}")
        values[key] = value

    if "kind" not in values:
        raise ValidationError("Experiment file has no 'kind' line")
    kinds = [k.value for k in ExperimentKind]
    if values["kind"] not in kinds:
        raise ValidationError(f"Unknown kind {values['kind']!r}; expected one of {', '.join(kinds)}")
    try:
        seed = int(values.get("seed", "0"))
    except ValueError:
        raise ValidationError(f"seed must be an integer, got {values['seed']!r}")
    params = {k: v for k, v in values.items() if k not in _RESERVED}
    return ExperimentConfig(kind=values["kind"], params=params, seed=seed, out_dir=values.get("out_dir"))


def load_experiment_file(path: str) -> ExperimentConfig:
    file = Path(path)
    if not file.is_file():
        raise ValidationError(f"Experiment file not found: {path}")
    return parse_experiment_text(file.read_text(encoding="utf-8"))


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    text = str(value)
    if "," in text or "\n" in text:
        raise ValidationError(f"CSV field contains a separator: {text!r}")
    return text


def render_csv(columns: List[str], rows: List[Dict[str, Any]]) -> str:
    """Comma separated, header row, LF line endings, no quoting."""
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_cell(row.get(c)) for c in columns))
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"


def check_anchors(report: Report) -> None:
    unknown = [a for a in report.anchors if a not in ANCHORS]
    if unknown:
        raise ValidationError(f"Report cites unknown anchors: {', '.join(unknown)}")


def report_files(report: Report) -> List[Tuple[str, str]]:
    """(file name, content) pairs for a finished report."""
    check_anchors(report)
    return [
        (f"{report.kind}.csv", render_csv(report.columns, report.rows)),
        (f"{report.kind}.json", render_json(report)),
    ]


def load_report(path: str) -> Report:
    file = Path(path)
    if file.is_dir():
        candidates = sorted(file.glob("*.json"))
        candidates = [c for c in candidates if c.name != "timing.json"]
        if len(candidates) != 1:
            raise ValidationError(f"Expected one report JSON in {path}, found {len(candidates)}")
        file = candidates[0]
    if not file.is_file():
        raise ValidationError(f"Report not found: {path}")
    with open(file, "r", encoding="utf-8") as f:
        return Report.from_dict(json.load(f))
