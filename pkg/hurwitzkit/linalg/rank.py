"""Exact and modular-certified ranks, kernels and induced maps on homology.

Two tiers: matrices with at most ``exact_nnz_threshold`` nonzeros are
eliminated fraction-free over ZZ (or over QQ when entries are rational);
larger ones are eliminated modulo two primes above 2^20, and the rank is
accepted only when both primes agree.
"""

import logging
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

from sympy import nextprime
from sympy.polys.domains import GF, QQ, ZZ

from ..core.config import get_config
from ..core.errors import ExactnessError
from ..models.experiment import CertificationMode
from .sparse import SparseMatrix

logger = logging.getLogger(__name__)

_PRIME_FLOOR = 2 ** 20


class RankResult(NamedTuple):
    rank: int
    mode: str
    primes: Tuple[int, ...] = ()


def modular_primes(count: int, avoid: int = 1, start: int = _PRIME_FLOOR) -> List[int]:
    """The first ``count`` primes above ``start`` that do not divide ``avoid``."""
    primes = []
    p = start
    while len(primes) < count:
        p = nextprime(p)
        if avoid % p:
            primes.append(int(p))
    return primes


def _sparsest_first(m: SparseMatrix) -> SparseMatrix:
    """Permute rows and columns into ascending nonzero count; a static ordering, not Markowitz pivoting."""
    col_count = [0] * m.cols
    row_count = [0] * m.rows
    for (r, c) in m.entries:
        col_count[c] += 1
        row_count[r] += 1
    col_pos = {c: i for i, c in enumerate(sorted(range(m.cols), key=lambda c: (col_count[c], c)))}
    row_pos = {r: i for i, r in enumerate(sorted(range(m.rows), key=lambda r: (row_count[r], r)))}
    return SparseMatrix(m.rows, m.cols, {(row_pos[r], col_pos[c]): v for (r, c), v in m.entries.items()})


def exact_rank(m: SparseMatrix) -> int:
    """Rank over QQ by fraction-free elimination."""
    if m.nnz == 0:
        return 0
    ordered = _sparsest_first(m)
    if ordered.is_integral:
        _, _, pivots = ordered.to_domain_matrix(ZZ).rref_den()
        return len(pivots)
    return ordered.to_domain_matrix(QQ).rank()


def modular_rank(m: SparseMatrix, p: int) -> int:
    if m.nnz == 0:
        return 0
    return _sparsest_first(m).to_domain_matrix(GF(p)).rank()


def certified(compute: Callable[[object], int], nnz: int, avoid: int = 1,
              force_mode: Optional[str] = None) -> RankResult:
    """Run ``compute(domain)`` exactly or at agreeing prime pairs.

    ``compute`` receives QQ in the exact tier and GF(p) in the modular tier.
    """
    limits = get_config().limits
    mode = force_mode or (CertificationMode.EXACT.value if nnz <= limits.exact_nnz_threshold
                          else CertificationMode.MODULAR.value)
    if mode == CertificationMode.EXACT.value:
        return RankResult(compute(QQ), mode)

    primes = modular_primes(2 * limits.modular_retry_cap, avoid=avoid)
    for attempt in range(limits.modular_retry_cap):
        p1, p2 = primes[2 * attempt], primes[2 * attempt + 1]
        r1, r2 = compute(GF(p1)), compute(GF(p2))
        if r1 == r2:
            return RankResult(r1, mode, (p1, p2))
        logger.warning(f"Modular ranks disagree at primes {p1}, {p2}: {r1} vs {r2}")
    raise ExactnessError("Modular rank runs disagree after retry cap",
                         {"retry_cap": limits.modular_retry_cap, "nnz": nnz})


def rank(m: SparseMatrix, avoid: int = 1) -> int:
    """Rank over the rationals with the two-tier policy."""
    return rank_certified(m, avoid).rank


def rank_certified(m: SparseMatrix, avoid: int = 1) -> RankResult:
    def compute(domain) -> int:
        if domain == QQ:
            return exact_rank(m)
        return modular_rank(m, domain.characteristic())
    return certified(compute, m.nnz, avoid)


def rank_over(m: SparseMatrix, domain) -> int:
    if m.nnz == 0:
        return 0
    if domain == QQ:
        return exact_rank(m)
    return modular_rank(m, domain.characteristic())


def kernel_basis(m: SparseMatrix, domain=QQ) -> SparseMatrix:
    """Columns spanning ker(m) over a field (QQ by default)."""
    if m.cols == 0:
        return SparseMatrix(0, 0)
    if m.nnz == 0:
        return SparseMatrix.identity(m.cols)
    null = m.to_domain_matrix(domain).nullspace()
    return SparseMatrix.from_domain_matrix(null).transpose()


def image_plus_rank(base: SparseMatrix, extra: SparseMatrix, domain) -> int:
    """dim(span(base) + span(extra)) - dim span(base), over a field."""
    if extra.cols == 0 or extra.nnz == 0:
        return 0
    return rank_over(base.hstack(extra), domain) - rank_over(base, domain)


def induced_map_rank(chain_map: SparseMatrix, source_out: SparseMatrix,
                     target_in: SparseMatrix, avoid: int = 1) -> RankResult:
    """Rank of the map on homology induced by a chain map.

    ``source_out`` is the differential leaving the source degree (its kernel
    is the cycle space), ``target_in`` the differential entering the target
    degree (its image is the boundary space). The rank is
    dim(B' + f(Z)) - dim B'.
    """
    nnz = chain_map.nnz + source_out.nnz + target_in.nnz

    def compute(domain) -> int:
        cycles = kernel_basis(source_out, domain) if source_out.rows else SparseMatrix.identity(source_out.cols)
        if cycles.cols == 0:
            return 0
        image = reduce_over(chain_map @ cycles, domain)
        return image_plus_rank(target_in, image, domain)

    return certified(compute, nnz, avoid)


def reduce_over(m: SparseMatrix, domain) -> SparseMatrix:
    """Entries reduced into GF(p); unchanged over QQ."""
    if domain == QQ:
        return m
    p = domain.characteristic()
    return SparseMatrix(m.rows, m.cols, {k: v % p for k, v in m.entries.items() if v % p})


def compose_is_zero(first: SparseMatrix, second: SparseMatrix) -> bool:
    """True iff first @ second vanishes exactly."""
    return (first @ second).is_zero()


def stack_rank(blocks: Sequence[SparseMatrix], avoid: int = 1) -> RankResult:
    """Rank of a block-diagonal matrix given by its blocks."""
    total, modes, primes = 0, set(), ()
    for block in blocks:
        result = rank_certified(block, avoid)
        total += result.rank
        modes.add(result.mode)
        primes = primes or result.primes
    mode = CertificationMode.MODULAR.value if CertificationMode.MODULAR.value in modes else CertificationMode.EXACT.value
    return RankResult(total, mode, primes)
