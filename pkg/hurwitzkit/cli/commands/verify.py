"""Acceptance suite command."""

import click
from rich.table import Table

from ...core.errors import AcceptanceError
from ...reports import CRITERIA, run_criteria
from .common import handle_errors


@click.command()
@click.option('--quick', is_flag=True, help='Reduced windows for a smoke test')
@click.option('--only', type=click.IntRange(1, len(CRITERIA)), multiple=True,
              help='Run only this criterion (repeatable)')
@click.pass_context
@handle_errors
def verify(ctx, quick, only):
    """Run the acceptance criteria; exit code 4 when any fails."""
    console = ctx.obj['console']
    results = run_criteria(quick=quick, only=list(only) or None)

    table = Table(title=f"Acceptance ({'quick' if quick else 'full'})", box=None)
    table.add_column("#", style="cyan")
    table.add_column("Criterion", style="white")
    table.add_column("Result")
    table.add_column("Seconds", style="magenta")
    table.add_column("Detail", style="dim")
    for r in results:
        verdict = "[green]pass[/green]" if r.passed else "[red]FAIL[/red]"
        table.add_row(str(r.number), r.name, verdict, f"{r.seconds:.1f}", r.detail)
    console.print(table)

    failed = [r for r in results if not r.passed]
    if failed:
        raise AcceptanceError(f"{len(failed)} of {len(results)} criteria failed")
    console.print(f"[green]✓ All {len(results)} criteria passed[/green]")
