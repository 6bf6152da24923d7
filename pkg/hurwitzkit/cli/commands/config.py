"""Configuration commands for HurwitzKit."""

from pathlib import Path

import click
import yaml
from rich.syntax import Syntax

from ...core.config import HurwitzKitConfig


@click.group(name='config')
def config_group():
    """Show or initialize the YAML settings."""
    pass


@config_group.command('show')
@click.option('--key', default=None, help='Dotted key, e.g. limits.max_states')
@click.pass_context
def show(ctx, key):
    """Show the effective configuration."""
    config = ctx.obj['config']
    console = ctx.obj['console']

    if key:
        try:
            console.print(f"{key} = {config.get(key)}")
        except KeyError:
            console.print(f"[red]Error: unknown key {key}[/red]")
            ctx.exit(2)
        return

    yaml_str = yaml.dump(config.config.model_dump(), default_flow_style=False)
    console.print(Syntax(yaml_str, "yaml", theme="monokai"))
    console.print(f"\n[dim]Configuration file: {config.config_path}[/dim]")


@config_group.command('init')
@click.option('--path', default=None, help='Where to write (default: the active config path)')
@click.pass_context
def init(ctx, path):
    """Write a configuration file with the default settings."""
    config = ctx.obj['config']
    console = ctx.obj['console']
    config_path = Path(path or config.config_path)

    if config_path.exists() and not ctx.obj['force']:
        if not click.confirm(f"Configuration already exists at {config_path}. Overwrite?"):
            return

    config_path.parent.mkdir(parents=True, exist_ok=True)
    with open(config_path, 'w') as f:
        yaml.dump(HurwitzKitConfig().model_dump(), f, default_flow_style=False)

    console.print(f"[green]✓ Configuration initialized at {config_path}[/green]")
