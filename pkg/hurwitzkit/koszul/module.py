"""Graded left R-modules given by action matrices."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..core.errors import ChainMapError, ValidationError
from ..groups.group import ConjClass, Group
from ..linalg.sparse import SparseMatrix

logger = logging.getLogger(__name__)


@dataclass
class GradedModule:
    """M = ⊕ M_m with matrices for r_g: M_m -> M_{m+1}.

    ``actions[p][m]`` is the matrix of the class member at position p,
    for m = 0 .. top - 1. ``ring`` is set when M is R itself.
    """

    tag: str
    group: Group
    cls: ConjClass
    dims: List[int]
    actions: Dict[int, List[SparseMatrix]]
    ring: Optional[object] = field(default=None, repr=False)

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def action(self, position: int, m: int) -> SparseMatrix:
        if m < 0 or m + 1 > self.top:
            raise ValidationError(f"Module {self.tag} has no action data from degree {m}")
        return self.actions[position][m]

    @classmethod
    def from_ring(cls, ring, top: int) -> "GradedModule":
        """R itself, through degree ``top``."""
        dims = [ring.dim(m) for m in range(top + 1)]
        actions = {
            p: [ring.left_action(g, m) for m in range(top)]
            for p, g in enumerate(ring.cls.members)
        }
        return cls(tag="R", group=ring.group, cls=ring.cls, dims=dims, actions=actions, ring=ring)

    def free(self, copies: int) -> "GradedModule":
        """The direct sum of ``copies`` copies of this module."""
        if copies < 1:
            raise ValidationError("A free module needs at least one copy")
        dims = [copies * d for d in self.dims]
        actions = {}
        for p, mats in self.actions.items():
            actions[p] = []
            for m, a in enumerate(mats):
                entries = {}
                for c in range(copies):
                    for (r, s), v in a.entries.items():
                        entries[(c * self.dims[m + 1] + r, c * self.dims[m] + s)] = v
                actions[p].append(SparseMatrix(dims[m + 1], dims[m], entries))
        tag = f"{self.tag}^{copies}"
        return GradedModule(tag=tag, group=self.group, cls=self.cls, dims=dims, actions=actions)

    def check_relation(self) -> None:
        """Assert r_g r_h = r_{g h g^-1} r_g in every computed degree."""
        conj = _class_conjugation(self.group, self.cls)
        k = len(self.cls)
        for m in range(self.top - 1):
            for a in range(k):
                for b in range(k):
                    lhs = self.action(a, m + 1) @ self.action(b, m)
                    rhs = self.action(conj[a][b], m + 1) @ self.action(a, m)
                    if lhs != rhs:
                        raise ChainMapError(
                            "Module action violates r_g r_h = r_{ghg^-1} r_g",
                            {"module": self.tag, "degree": m, "g": a, "h": b},
                        )


def _class_conjugation(group: Group, cls: ConjClass) -> List[List[int]]:
    """conj[a][b] = position of g_a g_b g_a^-1."""
    pos = {g: i for i, g in enumerate(cls.members)}
    return [
        [pos[group.product(ga, gb, int(group.inv[ga]))] for gb in cls.members]
        for ga in cls.members
    ]
