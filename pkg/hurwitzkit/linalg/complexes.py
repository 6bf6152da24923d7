"""Chain complexes and their homology dimensions."""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from ..core.errors import ChainMapError, ValidationError
from ..models.experiment import CertificationMode
from .rank import rank_certified
from .sparse import SparseMatrix

logger = logging.getLogger(__name__)


@dataclass
class GradedChainComplex:
    """C_0 <- C_1 <- ... <- C_top in one fixed total degree.

    ``differentials[i]`` is d_{i+1}: C_{i+1} -> C_i, of shape
    (terms[i], terms[i+1]).
    """

    terms: List[int]
    differentials: List[SparseMatrix]
    grade_label: int = 0
    avoid: int = 1
    checked: bool = field(default=False, repr=False)

    def __post_init__(self):
        if len(self.differentials) > max(len(self.terms) - 1, 0):
            raise ValidationError("More differentials than term pairs")
        for i, d in enumerate(self.differentials):
            if d.shape != (self.terms[i], self.terms[i + 1]):
                raise ValidationError(
                    f"d_{i + 1} has shape {d.shape}, expected {(self.terms[i], self.terms[i + 1])}"
                )

    def differential(self, q: int) -> SparseMatrix:
        """d_q: C_q -> C_{q-1}; zero when q = 0 or beyond the stored range."""
        if 1 <= q <= len(self.differentials):
            return self.differentials[q - 1]
        rows = self.terms[q - 1] if 1 <= q <= len(self.terms) else 0
        cols = self.terms[q] if 0 <= q < len(self.terms) else 0
        return SparseMatrix.zeros(rows, cols)

    def check(self) -> None:
        """Raise ChainMapError naming the first pair with d∘d != 0."""
        for i in range(len(self.differentials) - 1):
            if not (self.differentials[i] @ self.differentials[i + 1]).is_zero():
                raise ChainMapError(f"d_{i + 1} ∘ d_{i + 2} != 0", {"degree": self.grade_label})
        self.checked = True

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * t for q, t in enumerate(self.terms))


def homology_dims_certified(cplx: GradedChainComplex) -> Tuple[List[int], str]:
    """dim H_q = dim C_q - rank d_q - rank d_{q+1}, with the certification mode used."""
    if not cplx.checked:
        cplx.check()
    ranks = []
    modes = set()
    for d in cplx.differentials:
        result = rank_certified(d, cplx.avoid)
        ranks.append(result.rank)
        modes.add(result.mode)
    # d_0 and any differential past the stored ones are zero
    ranks = [0] + ranks + [0] * (len(cplx.terms) - len(ranks))
    dims = [cplx.terms[q] - ranks[q] - ranks[q + 1] for q in range(len(cplx.terms))]
    mode = CertificationMode.MODULAR.value if CertificationMode.MODULAR.value in modes else CertificationMode.EXACT.value
    logger.debug(f"Homology in degree {cplx.grade_label}: {dims} ({mode})")
    return dims, mode


def homology_dims(cplx: GradedChainComplex) -> List[int]:
    return homology_dims_certified(cplx)[0]
