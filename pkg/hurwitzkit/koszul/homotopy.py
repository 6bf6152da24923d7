"""The null-homotopy of right multiplication by r_g on K(R).

S_g(g_0, ..., g_{q-1}; s) = (x, g_0, ..., g_{q-1}; s) with
x = (g_0 ... g_{q-1} ∂s) g (g_0 ... g_{q-1} ∂s)^-1, and the identity

    d S_g + S_g d = (s -> s r_g)

holds on K(R)_q in every total degree.
"""

import logging
from typing import Dict, Tuple

from ..braids.ring import ComponentRing
from ..core.errors import ChainMapError, ValidationError
from ..linalg.sparse import SparseMatrix
from .complex import k_differential, word_code, words
from .module import GradedModule

logger = logging.getLogger(__name__)


def homotopy_matrix(ring: ComponentRing, g: int, n: int, q: int) -> SparseMatrix:
    """S_g: K(R)_q in total degree n -> K(R)_{q+1} in total degree n+1."""
    group, cls = ring.group, ring.cls
    k = len(cls)
    deg = n - q
    table = ring.table(deg)
    dim = len(table)
    entries: Dict[Tuple[int, int], int] = {}
    for w_index, word in enumerate(words(k, q)):
        prefix = group.product(*[cls.members[p] for p in word]) if word else 0
        for s in range(dim):
            h = int(group.mul[prefix, table.boundary[s]])
            x = group.product(h, g, int(group.inv[h]))
            target_word = cls.position(x) * k ** q + w_index
            entries[(target_word * dim + s, w_index * dim + s)] = 1
    return SparseMatrix(k ** (q + 1) * dim, k ** q * dim, entries)


def right_multiplication_matrix(ring: ComponentRing, g: int, n: int, q: int) -> SparseMatrix:
    """(w; s) -> (w; s r_g) from total degree n to n+1, homological degree q."""
    k = len(ring.cls)
    deg = n - q
    right = ring.right_action(g, deg)
    src_dim, tgt_dim = right.cols, right.rows
    entries = {}
    for w in range(k ** q):
        for (r, s), v in right.entries.items():
            entries[(w * tgt_dim + r, w * src_dim + s)] = v
    return SparseMatrix(k ** q * tgt_dim, k ** q * src_dim, entries)


def homotopy_check(ring: ComponentRing, g: int, n: int, q: int, module: GradedModule = None) -> bool:
    """Verify d S_g + S_g d = right multiplication by r_g on K(R)_q, total degree n.

    Raises ChainMapError when the identity fails.
    """
    if g not in ring.cls:
        raise ValidationError(f"Element {g} is not in the class")
    if not 0 <= q <= n:
        raise ValidationError(f"Need 0 <= q <= n, got q={q}, n={n}")
    M = module or GradedModule.from_ring(ring, n + 1)

    s_here = homotopy_matrix(ring, g, n, q)
    lhs = k_differential(M, n + 1, q + 1) @ s_here
    if q >= 1:
        lhs = lhs + homotopy_matrix(ring, g, n, q - 1) @ k_differential(M, n, q)
    rhs = right_multiplication_matrix(ring, g, n, q)
    if lhs != rhs:
        diff = (lhs - rhs).nnz
        raise ChainMapError("Homotopy identity fails", {"n": n, "q": q, "g": g, "mismatches": diff})
    logger.debug(f"Homotopy identity holds for g={g}, n={n}, q={q}")
    return True
