"""Print a saved report."""

import json

import click
from tabulate import tabulate

from ...reports import load_report, render_json
from .common import handle_errors


@click.command()
@click.argument('report_path', type=click.Path(exists=True))
@click.option('--format', 'fmt', type=click.Choice(['table', 'json']), default='table', help='Output format')
@click.option('--limit', type=int, default=None, help='Show at most this many rows')
@click.pass_context
@handle_errors
def show(ctx, report_path, fmt, limit):
    """Show the rows and summary of a saved report JSON (or its directory).

    Example:
        hurwitzkit show results/orbits.json --limit 10
    """
    report = load_report(report_path)
    if fmt == 'json':
        click.echo(render_json(report), nl=False)
        return

    rows = report.rows if limit is None else report.rows[:limit]
    click.echo(f"\n{report.kind} (version {report.tool_version}, seed {report.seed}, {report.certification})")
    if rows:
        data = [{c: row.get(c, "") for c in report.columns} for row in rows]
        click.echo(tabulate(data, headers='keys', tablefmt='grid'))
    if len(rows) < len(report.rows):
        click.echo(f"... {len(report.rows) - len(rows)} more rows")

    summary = [
        {'Key': key, 'Value': value if isinstance(value, (int, float, str)) else json.dumps(value, sort_keys=True)}
        for key, value in sorted(report.summary.items())
    ]
    if summary:
        click.echo("\nSummary:")
        click.echo(tabulate(summary, headers='keys', tablefmt='simple'))
