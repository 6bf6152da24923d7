"""Cycles modulo boundaries: representatives and coordinates."""

import logging
from typing import List

from sympy.polys.domains import QQ

from ..core.errors import ValidationError
from .sparse import SparseMatrix, _to_python

logger = logging.getLogger(__name__)


class SubspaceQuotient:
    """span(cycles) / span(boundaries) over a field.

    Boundaries and cycles share one ambient space and neither set need be
    independent. Representatives are the cycle columns that
    are independent modulo the boundaries, taken in the order given.
    """

    def __init__(self, boundaries: SparseMatrix, cycles: SparseMatrix, domain=QQ):
        if boundaries.rows != cycles.rows:
            raise ValidationError(
                f"Boundaries live in dimension {boundaries.rows}, cycles in {cycles.rows}"
            )
        self.domain = domain
        self.ambient = cycles.rows
        stacked = boundaries.hstack(cycles)
        if stacked.nnz == 0:
            pivots: List[int] = []
        else:
            _, pivots = stacked.to_domain_matrix(domain).rref()
        b_pivots = [c for c in pivots if c < boundaries.cols]
        chosen = [c - boundaries.cols for c in pivots if c >= boundaries.cols]
        self.boundary_rank = len(b_pivots)
        self.representatives = cycles.select_columns(chosen)
        self._basis = boundaries.select_columns(b_pivots).hstack(self.representatives)
        logger.debug(f"Quotient of dimension {self.dim} in ambient dimension {self.ambient}")

    @property
    def dim(self) -> int:
        return self.representatives.cols

    def coordinates(self, vectors: SparseMatrix) -> SparseMatrix:
        """Coordinates (dim x len) of vectors from span(cycles) in the representative basis."""
        if vectors.rows != self.ambient:
            raise ValidationError(f"Vectors have {vectors.rows} rows, expected {self.ambient}")
        if self.dim == 0 or vectors.cols == 0:
            return SparseMatrix(self.dim, vectors.cols)
        width = self._basis.cols
        augmented = self._basis.hstack(vectors).to_domain_matrix(self.domain)
        reduced, pivots = augmented.rref()
        if tuple(pivots) != tuple(range(width)):
            raise ValidationError("Vector does not lie in the span of the cycles")
        out = {}
        for r, row in reduced.to_sparse().rep.items():
            if r < self.boundary_rank:
                continue
            for c, v in row.items():
                if c >= width:
                    out[(r - self.boundary_rank, c - width)] = v
        return SparseMatrix.from_triplets(
            self.dim, vectors.cols,
            ((r, c, _to_python(v, self.domain)) for (r, c), v in out.items()),
        )