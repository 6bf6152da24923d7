"""Finite groups, conjugacy classes and subgroup lattices."""

from .group import Group, ConjClass, SubgroupList, build_group, conjugacy_class, subgroups, generated_subgroup
from .permutation import parse_cycles, to_cycles
from .presets import preset_group, parse_group_spec, load_group, resolve_class, load_pair, dihedral_generators
from .properties import is_nonsplitting, is_rational_class, involution_classes, NonsplittingResult, SplitWitness

__all__ = [
    "Group", "ConjClass", "SubgroupList", "build_group", "conjugacy_class", "subgroups",
    "generated_subgroup", "parse_cycles", "to_cycles", "preset_group", "parse_group_spec",
    "load_group", "resolve_class", "load_pair", "dihedral_generators",
    "is_nonsplitting", "is_rational_class", "involution_classes", "NonsplittingResult", "SplitWitness",
]
