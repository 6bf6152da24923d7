"""Exact sparse linear algebra."""

from .sparse import SparseMatrix, SparseIntMatrix, dump_triplets, load_triplets, from_arrays, block_diagonal
from .rank import (
    RankResult, rank, rank_certified, rank_over, exact_rank, modular_rank, kernel_basis,
    induced_map_rank, compose_is_zero, stack_rank, certified, modular_primes, reduce_over, image_plus_rank,
)
from .smith import smith_diagonal, local_smith_valuations, LocalSmith, valuation
from .complexes import GradedChainComplex, homology_dims, homology_dims_certified
from .subspace import SubspaceQuotient

__all__ = [
    "SparseMatrix", "SparseIntMatrix", "dump_triplets", "load_triplets", "from_arrays", "block_diagonal",
    "RankResult", "rank", "rank_certified", "rank_over", "exact_rank", "modular_rank",
    "kernel_basis", "induced_map_rank", "compose_is_zero", "stack_rank", "certified",
    "modular_primes", "reduce_over", "image_plus_rank", "smith_diagonal", "local_smith_valuations", "LocalSmith", "valuation",
    "GradedChainComplex", "homology_dims", "homology_dims_certified", "SubspaceQuotient",
]
