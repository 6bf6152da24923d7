"""Non-splitting and rationality tests for (G, c) pairs."""

import logging
from math import gcd
from typing import NamedTuple, Optional, Tuple

import numpy as np

from .group import ConjClass, Group, generated_subgroup

logger = logging.getLogger(__name__)


class SplitWitness(NamedTuple):
    """Why a pair fails the non-splitting test."""
    reason: str  # "not-generating" or "split"
    subgroup: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...] = ()


class NonsplittingResult(NamedTuple):
    ok: bool
    witness: Optional[SplitWitness]


def _h_class(group: Group, x: int, members: np.ndarray) -> frozenset:
    return frozenset(int(y) for y in group.mul[group.mul[group.inv[members], x], members])


def is_nonsplitting(group: Group, cls: ConjClass) -> NonsplittingResult:
    """Check that c generates G and meets every subgroup in at most one class.

    On failure the witness names either the proper subgroup generated by c
    or a subgroup H in which c∩H splits into several H-classes.
    """
    generated = generated_subgroup(group, cls.members)
    if len(generated) != group.order:
        logger.info(f"Class does not generate {group!r} (generates order {len(generated)})")
        return NonsplittingResult(False, SplitWitness("not-generating", tuple(sorted(generated))))

    in_class = np.zeros(group.order, dtype=bool)
    in_class[list(cls.members)] = True
    for h in group.subgroup_list:
        h_arr = np.array(h, dtype=np.int64)
        inter = h_arr[in_class[h_arr]]
        if len(inter) == 0:
            continue
        first = _h_class(group, int(inter[0]), h_arr)
        if len(first) != len(inter):
            split = []
            remaining = set(int(x) for x in inter)
            while remaining:
                piece = _h_class(group, min(remaining), h_arr)
                split.append(tuple(sorted(piece)))
                remaining -= piece
            return NonsplittingResult(False, SplitWitness("split", tuple(h), tuple(split)))
    return NonsplittingResult(True, None)


def is_rational_class(group: Group, cls: ConjClass) -> bool:
    """True iff g -> g^a preserves c for every a coprime to the class order."""
    m = cls.class_order
    members = set(cls.members)
    for a in range(2, m):
        if gcd(a, m) != 1:
            continue
        if {group.power(g, a) for g in cls.members} != members:
            return False
    return True


def involution_classes(group: Group) -> list:
    """Conjugacy classes of elements of order 2."""
    return [c for c in group.conjugacy_classes if c.class_order == 2]
