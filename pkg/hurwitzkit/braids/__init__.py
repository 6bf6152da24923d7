"""Braid orbits, the ring of components and its stabilizer."""

from .action import braid_act, boundary, global_monodromy, nielsen_multiset, ClassAction
from .orbits import OrbitTable, enumerate_orbits, prescribed_prefix_check, check_budget
from .ring import ComponentRing, RingElement, central_check
from .stabilizer import find_stabilizer_U, quotient_dims, components_stable, zero_tail_start

__all__ = [
    "braid_act", "boundary", "global_monodromy", "nielsen_multiset", "ClassAction",
    "OrbitTable", "enumerate_orbits", "prescribed_prefix_check", "check_budget",
    "ComponentRing", "RingElement", "central_check",
    "find_stabilizer_U", "quotient_dims", "components_stable", "zero_tail_start",
]
