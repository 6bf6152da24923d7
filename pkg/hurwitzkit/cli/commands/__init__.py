"""CLI commands for HurwitzKit."""

from .experiments import orbits, ring, kcomplex, homology, cl_sample, sp_check, ff_census, run
from .plot import plot
from .show import show
from .verify import verify
from .config import config_group

__all__ = [
    "orbits", "ring", "kcomplex", "homology", "cl_sample", "sp_check", "ff_census", "run",
    "plot", "show", "verify", "config_group",
]
