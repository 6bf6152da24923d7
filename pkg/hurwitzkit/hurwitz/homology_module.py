"""H_1 of Hurwitz spaces as a graded left module over the ring of components."""

import logging
from typing import Dict, List

from sympy.polys.domains import QQ

from ..braids.action import ClassAction
from ..core.config import get_config
from ..core.errors import BudgetExceededError
from ..groups.group import ConjClass, Group
from ..koszul.module import GradedModule
from ..linalg.rank import kernel_basis
from ..linalg.sparse import SparseMatrix
from ..linalg.subspace import SubspaceQuotient
from .fox import PresentationComplex, fox_complex, prefix_chain_maps

logger = logging.getLogger(__name__)


def _quotient(cplx: PresentationComplex) -> SubspaceQuotient:
    return SubspaceQuotient(cplx.d2, kernel_basis(cplx.d1, QQ), QQ)


def homology_module(group: Group, cls: ConjClass, top: int = None) -> GradedModule:
    """M_1 = (H_1(Hur_n; Q))_n through degree ``top``.

    r_g acts by prefixing g and shifting sigma_i to sigma_{i+1}; the
    matrices are coordinates in bases of cycle representatives. H_1
    vanishes for n <= 1.
    """
    cap = get_config().limits.homology_module_n_max
    top = cap if top is None else top
    if top > cap:
        raise BudgetExceededError(
            f"Homology module requested through degree {top}, limit is {cap}",
            {"homology_module_n_max": cap},
        )
    action = ClassAction(group, cls)
    complexes: Dict[int, PresentationComplex] = {}
    quotients: Dict[int, SubspaceQuotient] = {}
    dims: List[int] = []
    for n in range(top + 1):
        if n < 2:
            dims.append(0)
            continue
        complexes[n] = fox_complex(group, cls, n, action=action, split=False)
        complexes[n].check()
        quotients[n] = _quotient(complexes[n])
        dims.append(quotients[n].dim)
    logger.info(f"H_1 dimensions through degree {top}: {dims}")

    actions: Dict[int, List[SparseMatrix]] = {}
    for position, g in enumerate(cls.members):
        mats = []
        for m in range(top):
            if dims[m] == 0 or dims[m + 1] == 0:
                mats.append(SparseMatrix(dims[m + 1], dims[m]))
                continue
            f1 = prefix_chain_maps(complexes[m], complexes[m + 1], [(1, action.encode((g,)))], 1)[1]
            mats.append(quotients[m + 1].coordinates(f1 @ quotients[m].representatives))
        actions[position] = mats
    return GradedModule(tag="H1", group=group, cls=cls, dims=dims, actions=actions)
