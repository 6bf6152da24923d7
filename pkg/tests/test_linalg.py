from fractions import Fraction

import numpy as np
import pytest

from hurwitzkit.core.errors import ChainMapError, ValidationError
from hurwitzkit.linalg import (
    GradedChainComplex,
    SparseMatrix,
    SubspaceQuotient,
    block_diagonal,
    dump_triplets,
    from_arrays,
    homology_dims,
    kernel_basis,
    load_triplets,
    local_smith_valuations,
    rank,
    rank_certified,
    smith_diagonal,
    valuation,
)
from hurwitzkit.linalg.rank import _sparsest_first
from hurwitzkit.models import CertificationMode


def dense(rows):
    return SparseMatrix.from_triplets(
        len(rows), len(rows[0]),
        ((r, c, v) for r, row in enumerate(rows) for c, v in enumerate(row) if v),
    )


def test_zeros_are_not_stored():
    m = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): 3})
    assert m.nnz == 1


def test_entry_outside_shape():
    with pytest.raises(ValidationError):
        SparseMatrix(2, 2, {(2, 0): 1})


def test_from_arrays_sums_duplicates():
    m = from_arrays(2, 2, [0, 0, 1], [1, 1, 0], [2, -2, 5])
    assert m.entries == {(1, 0): 5}


def test_block_diagonal():
    m = block_diagonal([dense([[1, 2]]), dense([[3], [4]])])
    assert m.shape == (3, 3)
    assert m.entries == {(0, 0): 1, (0, 1): 2, (1, 2): 3, (2, 2): 4}


def test_rank_exact():
    m = dense([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    result = rank_certified(m)
    assert result.rank == 2
    assert result.mode == CertificationMode.EXACT.value


def test_rank_modular_tier(config):
    config.limits.exact_nnz_threshold = 0
    m = dense([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    result = rank_certified(m)
    assert result.rank == 2
    assert result.mode == CertificationMode.MODULAR.value
    p1, p2 = result.primes
    assert p1 != p2


def test_sparsest_first_ordering():
    m = dense([[1, 1, 1], [0, 2, 0], [3, 4, 0]])
    ordered = _sparsest_first(m)
    assert ordered.nnz == m.nnz
    row_counts = [sum(1 for (r, _) in ordered.entries if r == i) for i in range(ordered.rows)]
    col_counts = [sum(1 for (_, c) in ordered.entries if c == j) for j in range(ordered.cols)]
    assert row_counts == sorted(row_counts)
    assert col_counts == sorted(col_counts)
    assert rank(ordered) == rank(m) == 3


def test_rank_with_rationals():
    m = SparseMatrix.from_triplets(2, 2, [(0, 0, Fraction(1, 2)), (1, 1, Fraction(1, 3))])
    assert rank(m) == 2


def test_kernel_basis():
    m = dense([[1, 1, 0], [0, 0, 1]])
    kernel = kernel_basis(m)
    assert kernel.shape == (3, 1)
    assert (m @ kernel).is_zero()


def test_smith_diagonal():
    assert smith_diagonal(dense([[2, 0], [0, 3]])) == (1, 6)
    assert smith_diagonal(dense([[2, 4], [4, 8]])) == (2,)


def test_valuation():
    assert valuation(18, 3, 10) == 2
    assert valuation(0, 3, 5) == 5
    assert valuation(7, 3, 5) == 0


def test_local_smith():
    local = local_smith_valuations(np.array([[3, 0], [0, 9]]), 3, 4)
    assert local.valuations == (1, 2)
    assert local.cokernel_partition() == (2, 1)
    assert not local.saturated


def test_local_smith_saturates():
    local = local_smith_valuations(np.array([[0]]), 3, 2)
    assert local.saturated
    assert local.cokernel_partition() == (2,)


def test_triplet_file(tmp_path):
    m = SparseMatrix.from_triplets(3, 2, [(0, 1, 4), (2, 0, Fraction(-1, 2))])
    path = tmp_path / "m.txt"
    dump_triplets(m, str(path))
    assert path.read_text().splitlines()[0] == "3 2 2"
    assert load_triplets(str(path)) == m


def test_triplet_file_count_mismatch(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 2 2\n0 0 1\n")
    with pytest.raises(ValidationError):
        load_triplets(str(path))


def test_chain_complex_rejects_nonzero_square():
    one = dense([[1]])
    cplx = GradedChainComplex([1, 1, 1], [one, one])
    with pytest.raises(ChainMapError):
        cplx.check()


def test_chain_complex_shape_mismatch():
    with pytest.raises(ValidationError):
        GradedChainComplex([1, 2], [dense([[1]])])


def test_circle_homology():
    # one vertex, one loop
    cplx = GradedChainComplex([1, 1], [SparseMatrix.zeros(1, 1)])
    assert homology_dims(cplx) == [1, 1]
    assert cplx.euler_characteristic() == 0


def test_interval_homology():
    d1 = dense([[-1], [1]])
    assert homology_dims(GradedChainComplex([2, 1], [d1])) == [1, 0]


def test_missing_differentials_are_zero():
    assert homology_dims(GradedChainComplex([1, 1], [])) == [1, 1]
    d1 = dense([[-1], [1]])
    cplx = GradedChainComplex([2, 1, 3], [d1])
    assert homology_dims(cplx) == [1, 0, 3]
    assert cplx.differential(2).shape == (1, 3)


def test_subspace_quotient():
    boundaries = dense([[1], [0]])
    cycles = SparseMatrix.identity(2)
    quotient = SubspaceQuotient(boundaries, cycles)
    assert quotient.dim == 1
    coords = quotient.coordinates(dense([[5], [2]]))
    assert coords.shape == (1, 1)
    assert coords.entries == {(0, 0): 2}
