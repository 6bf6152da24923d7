"""Plot command for HurwitzKit."""

from pathlib import Path

import click

from ...reports import PLOT_KINDS, load_report, plot as plot_report
from .common import handle_errors


@click.command()
@click.argument('report_path', type=click.Path(exists=True))
@click.option('--kind', type=click.Choice(PLOT_KINDS), required=True, help='Which plot to draw')
@click.option('--output', '-o', default=None, help='SVG path (default: <kind>.svg next to the report)')
@click.pass_context
@handle_errors
def plot(ctx, report_path, kind, output):
    """Draw an SVG plot from a saved report JSON (or its directory).

    Example:
        hurwitzkit plot results/homology.json --kind betti-vs-n
    """
    console = ctx.obj['console']
    report = load_report(report_path)
    base = Path(report_path)
    target = output or str((base if base.is_dir() else base.parent) / f"{kind}.svg")
    if Path(target).exists() and not ctx.obj['force']:
        console.print(f"[red]Error: {target} exists; use --force[/red]")
        ctx.exit(2)
    path = plot_report(report, kind, target)
    console.print(f"[green]✓ Wrote {path}[/green]")
