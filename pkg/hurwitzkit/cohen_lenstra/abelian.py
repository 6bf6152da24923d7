"""Counting homomorphisms, surjections and automorphisms of finite abelian l-groups."""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Tuple

import numpy as np
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix
from sympy.utilities.iterables import partitions as _sympy_partitions

from ..core.config import get_config
from ..core.errors import BudgetExceededError, ValidationError
from ..models.abelian import AbelianLGroupType

logger = logging.getLogger(__name__)


def _same_prime(B: AbelianLGroupType, A: AbelianLGroupType) -> int:
    if B.l != A.l:
        raise ValidationError(f"Groups at different primes: {B.l} and {A.l}")
    return A.l


@lru_cache(maxsize=None)
def partitions_of(size: int) -> Tuple[Tuple[int, ...], ...]:
    """All partitions of ``size`` as non-increasing tuples, in reverse lexicographic order."""
    if size < 0:
        raise ValidationError(f"Negative partition size {size}")
    if size == 0:
        return ((),)
    out = []
    for mult in _sympy_partitions(size):
        out.append(tuple(sorted((part for part, k in mult.items() for _ in range(k)), reverse=True)))
    return tuple(sorted(out, reverse=True))


def partitions_up_to(max_size: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of 0, 1, ..., max_size."""
    for size in range(max_size + 1):
        yield from partitions_of(size)


def groups_up_to(l: int, max_size: int) -> List[AbelianLGroupType]:
    """Every abelian l-group of order at most l^max_size."""
    return [AbelianLGroupType(l=l, partition=p) for p in partitions_up_to(max_size)]


def contains(big: Tuple[int, ...], small: Tuple[int, ...]) -> bool:
    """Young diagram containment, equivalently: some surjection big -> small exists."""
    if len(small) > len(big):
        return False
    return all(b >= a for b, a in zip(big, small))


def hom_count(B: AbelianLGroupType, A: AbelianLGroupType) -> int:
    """|Hom(B, A)| = prod over factor pairs of l^min(b_i, a_j)."""
    l = _same_prime(B, A)
    return l ** sum(min(b, a) for b in B.partition for a in A.partition)


def sur_count(B: AbelianLGroupType, A: AbelianLGroupType) -> int:
    """|Sur(B, A)|.

    With A's exponents a_1 >= a_2 >= ... and s_j the number of factors of B
    of exponent at least a_j, the surjections are the fraction
    prod_j (1 - l^(j - 1 - s_j)) of all homomorphisms.
    """
    l = _same_prime(B, A)
    if A.size > B.size or not contains(B.partition, A.partition):
        return 0
    count = Fraction(hom_count(B, A))
    for j, a in enumerate(A.partition, start=1):
        s = sum(1 for b in B.partition if b >= a)
        count *= 1 - Fraction(l) ** (j - 1 - s)
    if count.denominator != 1 or count < 0:
        raise ValidationError(f"Non-integral surjection count {count}")
    return int(count)


def aut_order(A: AbelianLGroupType) -> int:
    """|Aut(A)| as Sur(A, A), cross-checked against the closed form."""
    value = sur_count(A, A)
    closed = aut_order_closed_form(A)
    if value != closed:
        raise ValidationError(f"Automorphism counts disagree for {A.label()}: {value} vs {closed}")
    return value


def aut_order_closed_form(A: AbelianLGroupType) -> int:
    """|Aut(A)| from the exponent multiplicities of A."""
    l = A.l
    e = sorted(A.partition)
    r = len(e)
    if r == 0:
        return 1
    # d_k = last index with e equal to e_k, c_k = first such index (1-based)
    d = [max(i + 1 for i in range(r) if e[i] == e[k]) for k in range(r)]
    c = [min(i + 1 for i in range(r) if e[i] == e[k]) for k in range(r)]
    total = 1
    for k in range(r):
        total *= l ** d[k] - l ** k
    for k in range(r):
        total *= (l ** e[k]) ** (r - d[k])
    for k in range(r):
        total *= (l ** (e[k] - 1)) ** (r - c[k] + 1)
    return total


def _elements_killed(A: AbelianLGroupType, b: int) -> List[Tuple[int, ...]]:
    """Elements x of A with l^b x = 0, as coordinate tuples."""
    l = A.l
    ranges = [range(0, l ** a, l ** max(a - b, 0)) for a in A.partition]
    return list(itertools.product(*ranges))


def brute_force_counts(B: AbelianLGroupType, A: AbelianLGroupType) -> Tuple[int, int]:
    """(|Hom(B, A)|, |Sur(B, A)|) by listing every homomorphism.

    A homomorphism is a choice of image for each cyclic generator of B;
    it is onto iff the images span A / lA.
    """
    l = _same_prime(B, A)
    homs = hom_count(B, A)
    budget = get_config().limits.structure_budget
    if homs > budget:
        raise BudgetExceededError(f"Brute force over {homs} homomorphisms exceeds {budget}",
                                  {"B": B.label(), "A": A.label()})
    if A.is_trivial:
        return homs, 1
    choices = [_elements_killed(A, b) for b in B.partition]
    field = GF(l)
    surjective = 0
    for images in itertools.product(*choices):
        if not images:
            continue
        reduced = np.array(images, dtype=np.int64).T % l
        dm = DomainMatrix([[field(int(x)) for x in row] for row in reduced.tolist()], reduced.shape, field)
        if dm.rank() == A.rank:
            surjective += 1
    return homs, surjective


def brute_force_aut(A: AbelianLGroupType) -> int:
    return brute_force_counts(A, A)[1]
