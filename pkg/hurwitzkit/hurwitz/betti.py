"""Betti numbers b_0 and b_1 of Hurwitz spaces and of their G-quotients."""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, NamedTuple, Optional

from ..braids.action import ClassAction
from ..core.errors import ComputationError, ValidationError
from ..groups.group import ConjClass, Group
from ..linalg.rank import stack_rank
from ..models.experiment import CertificationMode
from .fox import PresentationComplex, StateSpace, fox_complex

logger = logging.getLogger(__name__)


class BettiResult(NamedTuple):
    n: int
    b0: int
    b1: int
    mode: str

    def get(self, p: int) -> int:
        if p == 0:
            return self.b0
        if p == 1:
            return self.b1
        raise ValidationError(f"Only p in {{0, 1}} is supported, got {p}")


def cell_bound(group: Group, n: int) -> int:
    """(2|G|)^n, an upper bound for every Betti number of the n-point Hurwitz space."""
    return (2 * group.order) ** n


def complex_betti(cplx: PresentationComplex) -> BettiResult:
    """b_0 = dim C_0 - rank d_1 and b_1 = dim C_1 - rank d_1 - rank d_2, blockwise."""
    cplx.check()
    avoid = cplx.space.action.group.order
    r1 = stack_rank([b.d1 for b in cplx.blocks], avoid)
    r2 = stack_rank([b.d2 for b in cplx.blocks], avoid)
    mode = (CertificationMode.MODULAR.value
            if CertificationMode.MODULAR.value in (r1.mode, r2.mode) else CertificationMode.EXACT.value)
    return BettiResult(cplx.n, cplx.dims[0] - r1.rank, cplx.dims[1] - r1.rank - r2.rank, mode)


def betti_all(group: Group, cls: ConjClass, n: int, quotient_by_G: bool = False,
              max_states: Optional[int] = None) -> BettiResult:
    """Both Betti numbers in degree n, with the bound (2|G|)^n asserted."""
    if n < 0:
        raise ValidationError(f"n must be nonnegative, got {n}")
    action = ClassAction(group, cls)
    if n < 2:
        # B_0 and B_1 are trivial: the space is the discrete set of states.
        space = StateSpace(action, n, quotient=quotient_by_G, max_states=max_states)
        result = BettiResult(n, len(space), 0, CertificationMode.EXACT.value)
    else:
        result = complex_betti(fox_complex(group, cls, n, quotient_by_G, max_states, action=action))
    bound = cell_bound(group, n)
    if result.b0 > bound or result.b1 > bound:
        raise ComputationError(f"Betti numbers exceed the cell bound (2|G|)^n = {bound}", {"n": n})
    logger.info(f"n={n}{' (mod G)' if quotient_by_G else ''}: b0={result.b0} b1={result.b1} [{result.mode}]")
    return result


def betti(group: Group, cls: ConjClass, n: int, p: int, quotient_by_G: bool = False) -> int:
    """b_p of Hur^c_{G,n} (or of Hur^c_{G,n}/G) over Q, for p in {0, 1}."""
    if p not in (0, 1):
        raise ValidationError(f"Only p in {{0, 1}} is supported, got {p}")
    return betti_all(group, cls, n, quotient_by_G).get(p)


def _betti_job(args) -> BettiResult:
    return betti_all(*args)


def betti_table(group: Group, cls: ConjClass, n_min: int, n_max: int, quotient_by_G: bool = False,
                jobs: int = 1) -> List[BettiResult]:
    """Betti numbers for every n in [n_min, n_max], in order of n."""
    if n_min > n_max:
        raise ValidationError(f"Empty window [{n_min}, {n_max}]")
    tasks = [(group, cls, n, quotient_by_G) for n in range(n_min, n_max + 1)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_betti_job, tasks))
    return [_betti_job(t) for t in tasks]
