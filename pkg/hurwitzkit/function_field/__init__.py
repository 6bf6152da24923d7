"""Hyperelliptic function fields over F_q and their class groups."""

from .field import FiniteField, finite_field, irreducible_modulus
from .polynomials import PolyRing, SquarefreeFamily, enumerate_sf, expected_squarefree_count, monic_polynomials
from .curve import HyperellipticCurve, MumfordDivisor
from .cantor import cantor_add, negate, random_divisor, scalar_mul
from .zeta import ZetaData, check_annihilation, jacobian_order, l_polynomial, point_count, weil_interval
from .sylow import l_part_structure, l_power, partition_from_torsion, sylow_subgroup
from .census import class_group_record, cl_census, summarize, validate_census

__all__ = [
    "FiniteField", "finite_field", "irreducible_modulus",
    "PolyRing", "SquarefreeFamily", "enumerate_sf", "expected_squarefree_count", "monic_polynomials",
    "HyperellipticCurve", "MumfordDivisor",
    "cantor_add", "negate", "random_divisor", "scalar_mul",
    "ZetaData", "check_annihilation", "jacobian_order", "l_polynomial", "point_count", "weil_interval",
    "l_part_structure", "l_power", "partition_from_torsion", "sylow_subgroup",
    "class_group_record", "cl_census", "summarize", "validate_census",
]
