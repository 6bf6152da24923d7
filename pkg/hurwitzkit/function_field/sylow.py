"""The l-Sylow subgroup of a Jacobian and its partition type."""

import logging
import math
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..core.config import get_config
from ..core.errors import BudgetExceededError, ComputationError, ValidationError
from ..linalg.smith import valuation
from ..models.abelian import AbelianLGroupType
from .cantor import cantor_add, random_divisor, scalar_mul
from .curve import HyperellipticCurve, MumfordDivisor

logger = logging.getLogger(__name__)


def l_power(h: int, l: int) -> int:
    """The exact power of l dividing h."""
    if h <= 0:
        raise ValidationError(f"h must be positive, got {h}")
    return l ** valuation(h, l, h.bit_length())


def _extend(elements: Dict[tuple, MumfordDivisor], gen: MumfordDivisor,
            curve: HyperellipticCurve) -> Dict[tuple, MumfordDivisor]:
    """The subgroup generated by ``elements`` (a subgroup) and ``gen``."""
    if gen.key() in elements:
        return elements
    out = dict(elements)
    shift = gen
    while shift.key() not in elements:
        for d in elements.values():
            s = cantor_add(d, shift, curve)
            out[s.key()] = s
        shift = cantor_add(shift, gen, curve)
    return out


def sylow_subgroup(curve: HyperellipticCurve, l: int, h: int,
                   rng: np.random.Generator) -> List[MumfordDivisor]:
    """All elements of the l-Sylow subgroup, from projections (h / h_l) D of random D."""
    h_l = l_power(h, l)
    budget = get_config().limits.structure_budget
    if h_l > budget:
        raise BudgetExceededError(f"l-part of order {h_l} exceeds the structure budget {budget}",
                                  {"h": h, "l": l})
    cofactor = h // h_l
    elements = {curve.identity.key(): curve.identity}
    retry_cap = get_config().census.sylow_retry_cap
    tries = 0
    while len(elements) < h_l:
        if tries >= retry_cap:
            raise ComputationError(f"Sylow subgroup saturated at {len(elements)} of {h_l} elements",
                                   {"retry_cap": retry_cap})
        tries += 1
        gen = scalar_mul(cofactor, random_divisor(curve, rng), curve)
        elements = _extend(elements, gen, curve)
    if len(elements) != h_l:
        raise ComputationError(f"Sylow closure has {len(elements)} elements, expected {h_l}")
    return list(elements.values())


def partition_from_torsion(l: int, torsion_sizes: List[int]) -> Tuple[int, ...]:
    """Exponents from |S[l^k]| = l^(sum_i min(e_i, k)), k = 1, 2, ..."""
    ranks = [0] + [round(math.log(s, l)) for s in torsion_sizes]
    parts_at_least = [ranks[k] - ranks[k - 1] for k in range(1, len(ranks))]
    exponents = []
    for k, count in enumerate(parts_at_least, start=1):
        nxt = parts_at_least[k] if k < len(parts_at_least) else 0
        exponents += [k] * (count - nxt)
    return tuple(sorted(exponents, reverse=True))


def l_part_structure(curve: HyperellipticCurve, l: int, h: int,
                     rng: Optional[np.random.Generator] = None) -> AbelianLGroupType:
    """Partition type of the l-Sylow subgroup of Jac(C)(F_q)."""
    if l % 2 == 0 or curve.q % l == 0:
        raise ValidationError(f"l = {l} must be odd and prime to q = {curve.q}")
    if h % l:
        return AbelianLGroupType.trivial(l)
    rng = rng if rng is not None else np.random.default_rng(0)
    elements = sylow_subgroup(curve, l, h, rng)
    times_l = {d.key(): scalar_mul(l, d, curve).key() for d in elements}
    identity = curve.identity.key()
    order_exp: Dict[tuple, int] = {identity: 0}

    def exponent(key) -> int:
        chain = []
        while key not in order_exp:
            chain.append(key)
            key = times_l[key]
        e = order_exp[key]
        for k in reversed(chain):
            e += 1
            order_exp[k] = e
        return order_exp[chain[0]] if chain else e

    exps = [exponent(d.key()) for d in elements]
    top = max(exps)
    sizes = [sum(1 for e in exps if e <= k) for k in range(1, top + 1)]
    partition = partition_from_torsion(l, sizes)
    group = AbelianLGroupType(l=l, partition=partition)
    if group.order != len(elements):
        raise ComputationError(f"Torsion profile {sizes} does not match |S| = {len(elements)}")
    return group
