"""The K-complex of a graded R-module in a fixed total degree.

K(M)_q in total degree n is M_{n-q}^{c^q}. With basis (g_0, ..., g_{q-1}; m),
ordered by the word then by module index,

    d(g_0, ..., g_{q-1}; m) = sum_i (-1)^i (..., ^g_i, ...; r(g_i^{g_{i+1}...g_{q-1}}) m)

where x^h = h^-1 x h.
"""

import logging
from typing import Dict, List, Tuple

from ..core.errors import ValidationError
from ..linalg.complexes import GradedChainComplex
from ..linalg.sparse import SparseMatrix
from .module import GradedModule

logger = logging.getLogger(__name__)


def words(k: int, q: int) -> List[Tuple[int, ...]]:
    """All words of length q over class positions, lexicographic."""
    out = [()]
    for _ in range(q):
        out = [w + (p,) for w in out for p in range(k)]
    return out


def word_code(word: Tuple[int, ...], k: int) -> int:
    code = 0
    for p in word:
        code = code * k + p
    return code


def suffix_conjugates(M: GradedModule, word: Tuple[int, ...]) -> List[int]:
    """Class positions of g_i^{g_{i+1} ... g_{q-1}} for each i."""
    group, members = M.group, M.cls.members
    out = [0] * len(word)
    suffix = 0
    for i in range(len(word) - 1, -1, -1):
        g = members[word[i]]
        out[i] = M.cls.position(group.conjugate(g, suffix))
        suffix = int(group.mul[g, suffix])
    return out


def k_differential(M: GradedModule, n: int, q: int) -> SparseMatrix:
    """d_q: K(M)_q -> K(M)_{q-1} in total degree n."""
    k = len(M.cls)
    src_deg, tgt_deg = n - q, n - q + 1
    src_dim, tgt_dim = M.dims[src_deg], M.dims[tgt_deg]
    rows, cols = k ** (q - 1) * tgt_dim, k ** q * src_dim
    columns: Dict[int, Dict[int, Dict[int, object]]] = {}
    entries: Dict[Tuple[int, int], object] = {}
    for w_index, word in enumerate(words(k, q)):
        conj = suffix_conjugates(M, word)
        for i in range(q):
            sign = -1 if i % 2 else 1
            reduced = word_code(word[:i] + word[i + 1:], k)
            x = conj[i]
            if x not in columns:
                columns[x] = M.action(x, src_deg).columns()
            action_cols = columns[x]
            for j in range(src_dim):
                for r, v in action_cols.get(j, {}).items():
                    key = (reduced * tgt_dim + r, w_index * src_dim + j)
                    entries[key] = entries.get(key, 0) + sign * v
    return SparseMatrix(rows, cols, entries)


def build_k_complex(M: GradedModule, n: int) -> GradedChainComplex:
    """K(M) restricted to total degree n, terms q = 0 .. n."""
    if n > M.top:
        raise ValidationError(f"Module {M.tag} has data through degree {M.top}, need {n}")
    k = len(M.cls)
    terms = [k ** q * M.dims[n - q] for q in range(n + 1)]
    differentials = [k_differential(M, n, q) for q in range(1, n + 1)]
    return GradedChainComplex(terms=terms, differentials=differentials, grade_label=n, avoid=M.group.order)
