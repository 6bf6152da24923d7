"""Command line interface for HurwitzKit."""

import click
from rich.console import Console

from .. import __version__
from ..core.config import Config, set_config
from ..core.logging import setup_logging
from .commands import (
    cl_sample, config_group, ff_census, homology, kcomplex, orbits, plot, ring, run, show, sp_check, verify,
)


@click.group()
@click.version_option(version=__version__, prog_name="HurwitzKit")
@click.option('--config', 'config_path', default=None, help='YAML settings file')
@click.option('--seed', type=int, default=None, help='Random seed (default from settings)')
@click.option('--jobs', '-j', type=int, default=None, help='Worker processes')
@click.option('--force', is_flag=True, help='Overwrite existing results')
@click.option('--out-dir', '-o', default=None, help='Directory for result files')
@click.option('--verbose', '-v', is_flag=True, help='Debug logging')
@click.option('--log-file', default=None, help='Also write logs to this file')
@click.pass_context
def cli(ctx, config_path, seed, jobs, force, out_dir, verbose, log_file):
    """HurwitzKit - Hurwitz space homology and Cohen-Lenstra experiments"""
    ctx.ensure_object(dict)
    console = Console()
    config = Config(config_path)
    set_config(config)
    setup_logging(verbose=verbose, log_file=log_file)

    output = config.output
    ctx.obj['config'] = config
    ctx.obj['console'] = console
    ctx.obj['seed'] = output.seed if seed is None else seed
    ctx.obj['seed_given'] = seed is not None
    ctx.obj['jobs'] = jobs or output.jobs
    ctx.obj['force'] = force or output.force
    ctx.obj['out_dir'] = out_dir or output.out_dir
    ctx.obj['out_dir_given'] = out_dir is not None


cli.add_command(orbits)
cli.add_command(ring)
cli.add_command(kcomplex)
cli.add_command(homology)
cli.add_command(cl_sample)
cli.add_command(sp_check)
cli.add_command(ff_census)
cli.add_command(run)
cli.add_command(plot)
cli.add_command(show)
cli.add_command(verify)
cli.add_command(config_group)


def main():
    """Main entry point."""
    cli()


if __name__ == '__main__':
    main()
