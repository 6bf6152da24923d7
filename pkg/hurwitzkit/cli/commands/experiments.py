"""One command per experiment kind."""

import click
from rich.markup import escape

from ...reports import load_experiment_file, run_experiment
from .common import as_params, execute, handle_errors, pair_options, show_report


@click.command()
@pair_options
@click.option('--n-min', type=int, default=0, help='Smallest number of branch points')
@click.option('--n-max', type=int, required=True, help='Largest number of branch points')
@click.pass_context
@handle_errors
def orbits(ctx, group, class_rep, n_min, n_max):
    """Braid orbits on c^n with their invariants.

    Example:
        hurwitzkit orbits -g S3 -c "(1 2)" --n-max 6
    """
    execute(ctx, "orbits", as_params(group=group, class_rep=class_rep, n_min=n_min, n_max=n_max))


@click.command()
@pair_options
@click.option('--n-max', type=int, default=None, help='Degree window for the quotient R/U_D R')
@click.option('--d-max', type=int, default=None, help='Largest D tried')
@click.option('--central-n', type=int, default=None, help='Degree through which U_D is checked to be central')
@click.pass_context
@handle_errors
def ring(ctx, group, class_rep, n_max, d_max, central_n):
    """Ring of components and its stabilizing element U_D."""
    settings = ctx.obj['config'].stabilizer
    execute(ctx, "ring", as_params(group=group, class_rep=class_rep, n_max=n_max or settings.n_max,
                                   d_max=d_max or settings.d_max, central_n=central_n))


@click.command()
@pair_options
@click.option('--n-max', type=int, required=True, help='Largest total degree')
@click.option('--module', 'module', type=click.Choice(['R', 'free', 'M1']), default='R',
              help='R, a free module R^k, or the H_1 module M1')
@click.option('--copies', type=int, default=2, help='k for the free module R^k')
@click.option('--no-homotopy', is_flag=True, help='Skip the null-homotopy identity check')
@click.pass_context
@handle_errors
def kcomplex(ctx, group, class_rep, n_max, module, copies, no_homotopy):
    """Homology of the K-complex K(M) over a window of total degrees."""
    execute(ctx, "kcomplex", as_params(group=group, class_rep=class_rep, n_max=n_max, module=module,
                                       copies=copies, homotopy=not no_homotopy))


@click.command()
@pair_options
@click.option('--p', 'p', type=click.IntRange(0, 1), default=0, help='Homological degree')
@click.option('--n-min', type=int, default=2)
@click.option('--n-max', type=int, required=True)
@click.option('--quotient', is_flag=True, help='Also compute Hur/G and the G-invariant dimensions')
@click.pass_context
@handle_errors
def homology(ctx, group, class_rep, p, n_min, n_max, quotient):
    """Betti numbers of Hurwitz spaces and the stabilization map U.

    Example:
        hurwitzkit homology -g S3 -c "(1 2)" --p 1 --n-max 6
    """
    execute(ctx, "homology", as_params(group=group, class_rep=class_rep, p=p, n_min=n_min, n_max=n_max,
                                       quotient_by_G=quotient))


@click.command('cl-sample')
@click.option('--l', 'l', type=int, default=3)
@click.option('--N', 'N', type=int, default=8, help='Matrix size')
@click.option('--samples', type=int, default=100_000)
@click.option('--e-cap', type=int, default=None, help='Initial l-adic precision')
@click.option('--targets', required=True, help="Partitions separated by ';', e.g. '1; 2; 1,1'")
@click.option('--epsilon', default=None, help='Also check the enhom bound with this epsilon (e.g. 1/2)')
@click.option('--test-cap', type=int, default=None, help='Largest |X| tried by the enhom check')
@click.pass_context
@handle_errors
def cl_sample(ctx, l, N, samples, e_cap, targets, epsilon, test_cap):
    """Monte Carlo moments of random l-adic cokernels."""
    execute(ctx, "cl-sample", as_params(l=l, N=N, samples=samples, e_cap=e_cap, targets=targets,
                                        epsilon=epsilon, test_cap=test_cap))


@click.command('sp-check')
@click.option('--g', 'g', type=int, default=2, help='Half the rank of V')
@click.option('--l', 'l', type=int, default=3)
@click.option('--e', 'e', type=int, default=1, help='V = (Z/l^e)^2g')
@click.option('--target', default='1', help='Partition of A')
@click.option('--q', 'q_residue', type=int, default=2, help='Multiplier q modulo l^e')
@click.pass_context
@handle_errors
def sp_check(ctx, g, l, e, target, q_residue):
    """Sp-orbits on surjections fixed by a similitude of multiplier q."""
    execute(ctx, "sp-check", as_params(g=g, l=l, e=e, target=target, q_residue=q_residue))


@click.command('ff-census')
@click.option('--q', 'q', type=int, required=True, help='Field size')
@click.option('--n', 'n', type=int, required=True, help='Odd degree of f')
@click.option('--l', 'l', type=int, default=3)
@click.option('--targets', default='1', help="Partitions separated by ';'")
@click.pass_context
@handle_errors
def ff_census(ctx, q, n, l, targets):
    """Class group census over all y^2 = f with f squarefree of odd degree n.

    Example:
        hurwitzkit ff-census --q 7 --n 3 --l 3 --targets 1
    """
    report = execute(ctx, "ff-census", as_params(q=q, n=n, l=l, targets=targets))
    for warning in report.summary.get("warnings", []):
        ctx.obj['console'].print(f"[yellow]Warning: {escape(warning)}[/yellow]")


@click.command()
@click.argument('experiment_file', type=click.Path(exists=True, dir_okay=False))
@click.pass_context
@handle_errors
def run(ctx, experiment_file):
    """Run an experiment described by a key = value file."""
    config = load_experiment_file(experiment_file)
    if ctx.obj['seed_given']:
        config.seed = ctx.obj['seed']
    out_dir = ctx.obj['out_dir'] if ctx.obj['out_dir_given'] else None
    report, paths = run_experiment(config, out_dir=out_dir, force=ctx.obj['force'], jobs=ctx.obj['jobs'])
    show_report(ctx.obj['console'], report)
    for name, path in sorted(paths.items()):
        ctx.obj['console'].print(f"[green]✓ Wrote {path}[/green]")
