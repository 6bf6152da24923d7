"""Shared helpers for HurwitzKit commands."""

import functools
from typing import Any, Dict

import click
from rich.markup import escape
from rich.table import Table

from ...core.errors import HurwitzKitError
from ...models.experiment import ExperimentConfig, Report
from ...reports import run_experiment


def handle_errors(f):
    """Print HurwitzKit errors in red and exit with their code."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return f(*args, **kwargs)
        except HurwitzKitError as e:
            ctx.obj['console'].print(f"[red]Error: {escape(str(e))}[/red]")
            ctx.exit(e.exit_code)

    return wrapper


def pair_options(f):
    """--group and --class-rep."""
    f = click.option('--class-rep', '-c', required=True,
                     help="Class representative: cycle notation, #index or 'involution'")(f)
    f = click.option('--group', '-g', required=True,
                     help='Preset name (S3, A4, dihedral(3; 2), ...), spec text or spec file')(f)
    return f


def as_params(**values: Any) -> Dict[str, str]:
    """Experiment parameters as strings; unset options are left out."""
    out = {}
    for key, value in values.items():
        if value is None:
            continue
        if isinstance(value, bool):
            value = "true" if value else "false"
        out[key] = str(value)
    return out


def execute(ctx, kind: str, params: Dict[str, str]) -> Report:
    """Run one experiment with the global --seed/--jobs/--force/--out-dir settings."""
    console = ctx.obj['console']
    config = ExperimentConfig(kind=kind, params=params, seed=ctx.obj['seed'])
    report, paths = run_experiment(config, out_dir=ctx.obj['out_dir'], force=ctx.obj['force'],
                                   jobs=ctx.obj['jobs'])
    show_report(console, report)
    for name, path in sorted(paths.items()):
        console.print(f"[green]✓ Wrote {path}[/green]")
    return report


def show_report(console, report: Report, max_rows: int = 20) -> None:
    table = Table(title=f"{report.kind} ({len(report.rows)} rows, {report.certification})", box=None)
    for column in report.columns:
        table.add_column(column, style="cyan" if column == report.columns[0] else "white")
    for row in report.rows[:max_rows]:
        table.add_row(*["" if row.get(c) is None else str(row.get(c)) for c in report.columns])
    console.print(table)
    if len(report.rows) > max_rows:
        console.print(f"[dim]... {len(report.rows) - max_rows} more rows in the CSV[/dim]")
    anchors = ", ".join(report.anchors)
    console.print(f"\n[dim]Anchors: {anchors}[/dim]")
