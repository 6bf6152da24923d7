"""HurwitzKit - braid orbits, Hurwitz homology and Cohen-Lenstra statistics at desk scale."""

__version__ = "0.3.0"
__author__ = "techs_targe"
__email__ = "hurwitzkit@example.com"

from . import core, models, groups, braids, linalg, koszul, hurwitz, cohen_lenstra, function_field

__all__ = [
    "core", "models", "groups", "braids", "linalg", "koszul",
    "hurwitz", "cohen_lenstra", "function_field",
]
