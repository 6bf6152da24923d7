"""Cohen-Lenstra measure, random cokernels and group counting."""

from .abelian import (
    partitions_of, partitions_up_to, groups_up_to, contains, hom_count, sur_count, aut_order,
    aut_order_closed_form, brute_force_counts, brute_force_aut,
)
from .measure import (
    MassEstimate, MomentIdentity, eta, eta_partial, tail_sum, mu_mass, beta_constant, total_mass,
    trivial_mass_readings, truncated_moment_identity,
)
from .sampler import (
    make_rng, draw_cokernel, sample_cokernel, sample_batch, SampleBatch, MomentEstimate,
    moment_estimate, moments_from_groups, stability_check, StabilityCheck,
)
from .enhom import EnhomResult, covering_groups, prescribed_s, enhom_bound_check, find_failing_s
from .symplectic import (
    SymplecticSpace, SymplecticOrbitResult, symplectic_group_order, surjections, symplectic_orbit_check,
)

__all__ = [
    "partitions_of", "partitions_up_to", "groups_up_to", "contains", "hom_count", "sur_count",
    "aut_order", "aut_order_closed_form", "brute_force_counts", "brute_force_aut",
    "MassEstimate", "MomentIdentity", "eta", "eta_partial", "tail_sum", "mu_mass", "beta_constant",
    "total_mass", "trivial_mass_readings", "truncated_moment_identity",
    "make_rng", "draw_cokernel", "sample_cokernel", "sample_batch", "SampleBatch", "MomentEstimate",
    "moment_estimate", "moments_from_groups", "stability_check", "StabilityCheck",
    "EnhomResult", "covering_groups", "prescribed_s", "enhom_bound_check", "find_failing_s",
    "SymplecticSpace", "SymplecticOrbitResult", "symplectic_group_order", "surjections",
    "symplectic_orbit_check",
]
