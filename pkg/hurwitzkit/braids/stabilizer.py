"""Search for the stabilizing central element U_D."""

import logging
from typing import List, Optional, Tuple

from ..core.config import get_config
from ..core.errors import ValidationError
from ..groups.group import ConjClass, Group
from ..groups.properties import is_nonsplitting
from ..linalg.rank import rank_certified
from ..models.experiment import CertificationMode
from ..models.stability import StabilizerDescriptor
from .ring import ComponentRing

logger = logging.getLogger(__name__)


def quotient_dims(ring: ComponentRing, D: int, n_max: int) -> Tuple[List[int], str]:
    """dim (R / U_D R)_m for m = 0 .. n_max, with the rank certification used."""
    u = ring.u_element(D)
    dims, modes = [], set()
    for m in range(n_max + 1):
        if m < u.degree:
            dims.append(ring.dim(m))
            continue
        result = rank_certified(ring.multiplication_matrix(u, m - u.degree), ring.group.order)
        modes.add(result.mode)
        dims.append(ring.dim(m) - result.rank)
    mode = CertificationMode.MODULAR.value if CertificationMode.MODULAR.value in modes else CertificationMode.EXACT.value
    return dims, mode


def zero_tail_start(dims: List[int]) -> Optional[int]:
    """Least n_0 with dims[n] = 0 for all n >= n_0, or None if the last entry is nonzero."""
    if not dims or dims[-1] != 0:
        return None
    n0 = len(dims)
    while n0 > 0 and dims[n0 - 1] == 0:
        n0 -= 1
    return n0


def find_stabilizer_U(group: Group, cls: ConjClass, d_max: int = None, n_max: int = None,
                      ring: ComponentRing = None) -> StabilizerDescriptor:
    """Least D <= d_max whose U_D has zero quotient on a tail of the window.

    The tail must span at least ``min_tail_periods`` multiples of deg U_D.
    When no D qualifies the descriptor comes back with ``found=False``.
    """
    settings = get_config().stabilizer
    d_max = d_max or settings.d_max
    n_max = n_max or settings.n_max
    verdict = is_nonsplitting(group, cls)
    if not verdict.ok:
        raise ValidationError(
            f"(G, c) is not non-splitting: {verdict.witness.reason}",
            {"witness_subgroup_order": len(verdict.witness.subgroup)},
        )

    ring = ring or ComponentRing(group, cls)
    orbit_counts = [ring.dim(m) for m in range(n_max + 1)]
    generating = [ring.table(m).generating_count for m in range(n_max + 1)]
    tried = []
    last = None
    for D in range(1, d_max + 1):
        deg_u = D * cls.class_order
        if deg_u > n_max:
            break
        tried.append(D)
        dims, mode = quotient_dims(ring, D, n_max)
        n0 = zero_tail_start(dims)
        found = n0 is not None and n_max - n0 + 1 >= settings.min_tail_periods * deg_u
        last = StabilizerDescriptor(
            found=found, D=D, deg_U=deg_u,
            verified_range=(n0 if n0 is not None else n_max + 1, n_max),
            quotient_dims=dims, orbit_counts=orbit_counts, generating_counts=generating,
            certification=mode, tried=list(tried),
        )
        logger.info(f"D={D}: quotient dims {dims}")
        if found:
            return last
    logger.warning(f"No D <= {d_max} stabilizes R within degree {n_max}; a larger window may be needed")
    if last is None:
        return StabilizerDescriptor(found=False, D=0, deg_U=0, verified_range=(n_max + 1, n_max),
                                    quotient_dims=[], orbit_counts=orbit_counts,
                                    generating_counts=generating, tried=tried)
    return last


def components_stable(descriptor: StabilizerDescriptor) -> bool:
    """|S_n(G)| = |S_{n + deg U}(G)| for all n on the verified tail."""
    n0, n_max = descriptor.verified_range
    counts = descriptor.generating_counts
    return all(counts[n] == counts[n + descriptor.deg_U] for n in range(n0, n_max - descriptor.deg_U + 1))
