"""Smith normal forms over ZZ and over the local rings Z/l^e."""

import logging
from typing import List, NamedTuple, Tuple

import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.matrices.normalforms import invariant_factors

from .sparse import SparseMatrix

logger = logging.getLogger(__name__)


def smith_diagonal(m: SparseMatrix) -> Tuple[int, ...]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    if m.rows == 0 or m.cols == 0 or m.nnz == 0:
        return ()
    factors = invariant_factors(m.to_domain_matrix(ZZ).to_dense())
    return tuple(sorted(abs(int(d)) for d in factors if d != 0))


def valuation(x: int, l: int, cap: int) -> int:
    """l-adic valuation of x, capped (x = 0 has valuation cap)."""
    if x == 0:
        return cap
    v = 0
    while x % l == 0 and v < cap:
        x //= l
        v += 1
    return v


class LocalSmith(NamedTuple):
    """Invariant factor valuations of a square matrix over Z/l^e."""
    valuations: Tuple[int, ...]  # one per diagonal position, each in [0, e]
    e: int

    @property
    def saturated(self) -> bool:
        return self.e in self.valuations

    def cokernel_partition(self) -> Tuple[int, ...]:
        return tuple(sorted((v for v in self.valuations if v > 0), reverse=True))


def local_smith_valuations(matrix: np.ndarray, l: int, e: int) -> LocalSmith:
    """Diagonalize over Z/l^e, pivoting on an entry of least valuation.

    Entries of valuation e are zero in Z/l^e; a diagonal valuation equal to
    e means the true invariant factor is at least l^e.
    """
    modulus = l ** e
    a = np.array(matrix, dtype=np.int64) % modulus
    n_rows, n_cols = a.shape
    size = min(n_rows, n_cols)
    vals: List[int] = []
    powers = [l ** k for k in range(e + 1)]

    def val_array(block: np.ndarray) -> np.ndarray:
        out = np.full(block.shape, e, dtype=np.int64)
        for k in range(e - 1, -1, -1):
            out[(block % powers[k + 1]) != 0] = k
        return out

    for k in range(size):
        block = a[k:, k:]
        v = val_array(block)
        flat = int(np.argmin(v))
        vmin = int(v.flat[flat])
        if vmin == e:
            vals.extend([e] * (size - k))
            break
        i, j = divmod(flat, block.shape[1])
        i += k
        j += k
        a[[k, i]] = a[[i, k]]
        a[:, [k, j]] = a[:, [j, k]]
        pivot = int(a[k, k])
        unit = pivot // powers[vmin]
        unit_inv = pow(unit, -1, modulus)
        # clear column k below the pivot, then row k to the right
        factors = ((a[k + 1:, k] // powers[vmin]) * unit_inv) % modulus
        a[k + 1:, :] = (a[k + 1:, :] - np.outer(factors, a[k, :])) % modulus
        factors = ((a[k, k + 1:] // powers[vmin]) * unit_inv) % modulus
        a[:, k + 1:] = (a[:, k + 1:] - np.outer(a[:, k], factors)) % modulus
        vals.append(vmin)
    return LocalSmith(tuple(vals), e)
