"""Bounding surjections onto A by averages over the larger groups that cover A."""

import logging
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from ..core.errors import ValidationError
from ..models.abelian import AbelianLGroupType
from .abelian import contains, partitions_of, partitions_up_to, sur_count

logger = logging.getLogger(__name__)


def covering_groups(A: AbelianLGroupType, s: int) -> List[AbelianLGroupType]:
    """Groups of order l^s |A| that surject onto A."""
    return [
        AbelianLGroupType(l=A.l, partition=p)
        for p in partitions_of(A.size + s)
        if contains(p, A.partition)
    ]


def prescribed_s(A: AbelianLGroupType, epsilon: Fraction, s_max: int = 64) -> int:
    """Least s >= 1 with |M_s| <= epsilon * l^s, M_s the covering groups of order l^s |A|."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValidationError(f"epsilon must be positive, got {epsilon}")
    for s in range(1, s_max + 1):
        if len(covering_groups(A, s)) <= epsilon * A.l ** s:
            return s
    raise ValidationError(f"No s <= {s_max} satisfies the covering count bound", {"epsilon": str(epsilon)})


class EnhomResult(NamedTuple):
    holds: bool
    s: int
    c_A: int
    checked: int
    counterexample: Optional[Tuple[int, ...]]


def enhom_bound_check(A: AbelianLGroupType, epsilon, test_cap: int, s: Optional[int] = None) -> EnhomResult:
    """Check |Sur(X, A)| <= epsilon * mean over A' in M_s of |Sur(X, A')|.

    Every X with c(A) < |X| <= test_cap is tried, where c(A) = l^(s-1) |A|.
    ``test_cap`` is a power of l; ``s`` defaults to the prescription.
    """
    epsilon = Fraction(epsilon)
    s = prescribed_s(A, epsilon) if s is None else s
    if s < 0:
        raise ValidationError(f"s must be nonnegative, got {s}")
    cap_size = 0
    while A.l ** cap_size < test_cap:
        cap_size += 1
    if A.l ** cap_size != test_cap:
        raise ValidationError(f"test_cap {test_cap} is not a power of {A.l}")
    covers = covering_groups(A, s)
    # c(A) = l^(s-1) |A|, so |X| > c(A) means size(X) >= size(A) + s
    c_A = Fraction(A.l) ** (s - 1) * A.order
    checked = 0
    for p in partitions_up_to(cap_size):
        X = AbelianLGroupType(l=A.l, partition=p)
        if X.order <= c_A:
            continue
        checked += 1
        lhs = sur_count(X, A)
        rhs = epsilon * Fraction(sum(sur_count(X, B) for B in covers), len(covers))
        if lhs > rhs:
            logger.info(f"Bound fails at s={s} for X={X.label()}: {lhs} > {float(rhs):.4f}")
            return EnhomResult(False, s, int(c_A) if c_A.denominator == 1 else 0, checked, p)
    return EnhomResult(True, s, int(c_A) if c_A.denominator == 1 else 0, checked, None)


def find_failing_s(A: AbelianLGroupType, epsilon, test_cap: int) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """The largest s below the prescription for which the bound fails, with its counterexample."""
    prescribed = prescribed_s(A, Fraction(epsilon))
    for s in range(prescribed - 1, -1, -1):
        result = enhom_bound_check(A, epsilon, test_cap, s=s)
        if not result.holds:
            return s, result.counterexample
    return None
