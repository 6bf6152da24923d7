"""The stabilization map U: H_p(Hur_n) -> H_p(Hur_{n + deg U}) and its rank."""

import logging
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..braids.action import ClassAction
from ..braids.orbits import enumerate_orbits
from ..braids.stabilizer import find_stabilizer_U
from ..core.errors import ComputationError, ValidationError
from ..groups.group import ConjClass, Group
from ..linalg.rank import RankResult, reduce_over, certified, image_plus_rank, kernel_basis
from ..linalg.sparse import SparseMatrix, block_diagonal
from ..models.experiment import CertificationMode
from ..models.stability import StabilityReport, StabilizerDescriptor
from .betti import BettiResult, betti_table, complex_betti
from .fox import (
    PresentationComplex, check_chain_map, conjugation_chain_maps, fox_complex, prefix_chain_maps,
)

logger = logging.getLogger(__name__)


class UMapResult(NamedTuple):
    n: int
    rank: int
    bijective: bool
    source_betti: int
    target_betti: int
    mode: str


def _cycles(cplx: PresentationComplex, p: int, domain) -> SparseMatrix:
    """Columns spanning the cycles of C_p, built block by block in global coordinates."""
    entries = {}
    col = 0
    for block in cplx.blocks:
        index = cplx.cell_index(block, p)
        z = kernel_basis(block.d1, domain) if p == 1 else SparseMatrix.identity(len(block.states))
        for (r, c), v in z.entries.items():
            entries[(int(index[r]), col + c)] = v
        col += z.cols
    return SparseMatrix(cplx.dims[p], col, entries)


def _components(image: SparseMatrix, owner: np.ndarray, count: int) -> List[List[int]]:
    """Target blocks linked by image columns, as sorted lists of block indices."""
    parent = list(range(count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    touched = set()
    for column in image.columns().values():
        blocks = sorted({int(owner[r]) for r in column})
        touched.update(blocks)
        for b in blocks[1:]:
            ra, rb = find(blocks[0]), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: Dict[int, List[int]] = {}
    for b in sorted(touched):
        groups.setdefault(find(b), []).append(b)
    return list(groups.values())


def induced_rank(f: SparseMatrix, source: PresentationComplex, target: PresentationComplex,
                 p: int) -> RankResult:
    """Rank of the map H_p(source) -> H_p(target) induced by f: C_p -> C_p.

    Computed as dim(B' + f(Z)) - dim B' over the groups of target blocks
    that the image of f connects.
    """
    if p not in (0, 1):
        raise ValidationError(f"Only p in {{0, 1}} is supported, got {p}")
    boundary = (lambda b: b.d1) if p == 0 else (lambda b: b.d2)
    nnz = f.nnz + source.d1.nnz + (target.d1.nnz if p == 0 else target.d2.nnz)
    avoid = source.space.action.group.order

    def compute(domain) -> int:
        cycles = _cycles(source, p, domain)
        if cycles.cols == 0:
            return 0
        image = reduce_over(f @ cycles, domain)
        owner = target.cell_blocks(p)
        total = 0
        for comp in _components(image, owner, len(target.blocks)):
            local = np.full(target.dims[p], -1, dtype=np.int64)
            offset = 0
            for b in comp:
                index = target.cell_index(target.blocks[b], p)
                local[index] = offset + np.arange(len(index))
                offset += len(index)
            base = block_diagonal([boundary(target.blocks[b]) for b in comp])
            cols = sorted({c for (r, c) in image.entries if local[r] >= 0})
            col_pos = {c: j for j, c in enumerate(cols)}
            extra = SparseMatrix(offset, len(cols), {
                (int(local[r]), col_pos[c]): v for (r, c), v in image.entries.items() if c in col_pos
            })
            total += image_plus_rank(base, extra, domain)
        return total

    return certified(compute, nnz, avoid)


def u_prefixes(action: ClassAction, descriptor: StabilizerDescriptor) -> List[Tuple[int, int]]:
    """(coefficient, code) of each constant tuple (g, ..., g) of length deg U in U_D."""
    return [(1, action.encode((g,) * descriptor.deg_U)) for g in action.cls.members]


def stabilization_u_map(group: Group, cls: ConjClass, p: int, n: int, descriptor: StabilizerDescriptor,
                        quotient_by_G: bool = False, source: PresentationComplex = None,
                        target: PresentationComplex = None,
                        betti_values: Tuple[int, int] = None) -> UMapResult:
    """Rank of U on H_p(n) and whether it is bijective.

    The chain map is left concatenation with each constant tuple of U
    together with the shift sigma_i -> sigma_{i + deg U}; d f = f d is
    asserted before any rank is taken.
    """
    if not descriptor.deg_U:
        raise ValidationError("The stabilizer descriptor has no U (deg U = 0)")
    d = descriptor.deg_U
    action = ClassAction(group, cls)
    source = source or fox_complex(group, cls, n, quotient_by_G, action=action)
    target = target or fox_complex(group, cls, n + d, quotient_by_G, action=action)
    maps = prefix_chain_maps(source, target, u_prefixes(action, descriptor), d)
    check_chain_map(source, target, maps)
    result = induced_rank(maps[p], source, target, p)
    if betti_values is None:
        betti_values = (complex_betti(source).get(p), complex_betti(target).get(p))
    b_src, b_tgt = betti_values
    if result.rank > min(b_src, b_tgt):
        raise ComputationError("U-map rank exceeds the Betti numbers", {"n": n, "p": p, "rank": result.rank})
    bijective = result.rank == b_src == b_tgt
    logger.info(f"U on H_{p}: n={n} -> {n + d}, rank {result.rank} ({b_src} -> {b_tgt})")
    return UMapResult(n, result.rank, bijective, b_src, b_tgt, result.mode)


def invariant_dim(group: Group, cls: ConjClass, p: int, n: int,
                  cplx: PresentationComplex = None) -> int:
    """dim H_p(Hur_n)^G as the rank of the averaging operator sum_h h_*."""
    if n < 2:
        raise ValidationError(f"invariant_dim needs n >= 2, got {n}")
    cplx = cplx or fox_complex(group, cls, n)
    maps = conjugation_chain_maps(cplx, range(group.order))
    check_chain_map(cplx, cplx, maps)
    return induced_rank(maps[p], cplx, cplx, p).rank


def observed_n0(n_values: Sequence[int], bijective: Sequence[Optional[bool]]) -> Optional[int]:
    """Least n from which every computed U-map is bijective."""
    computed = [(n, b) for n, b in zip(n_values, bijective) if b is not None]
    if not computed or not computed[-1][1]:
        return None
    n0 = computed[-1][0]
    for n, b in reversed(computed):
        if not b:
            break
        n0 = n
    return n0


def stability_report(group: Group, cls: ConjClass, p: int, n_min: int, n_max: int,
                     descriptor: StabilizerDescriptor = None, quotient_by_G: bool = False,
                     jobs: int = 1) -> StabilityReport:
    """Betti numbers, U-map ranks and the G-quotient comparison over [n_min, n_max]."""
    if p not in (0, 1):
        raise ValidationError(f"Only p in {{0, 1}} is supported, got {p}")
    if n_min < 2:
        raise ValidationError(f"The homology window starts at n >= 2, got {n_min}")
    descriptor = descriptor or find_stabilizer_U(group, cls)
    d = descriptor.deg_U
    table: List[BettiResult] = betti_table(group, cls, n_min, n_max, jobs=jobs)
    n_values = [r.n for r in table]
    by_n = {r.n: r for r in table}

    orbit_counts = [len(enumerate_orbits(group, cls, n)) for n in n_values]
    for r, count in zip(table, orbit_counts):
        if r.b0 != count:
            raise ComputationError(
                f"b_0 = {r.b0} disagrees with the braid orbit count {count}", {"n": r.n}
            )

    ranks: List[Optional[int]] = []
    bijective: List[Optional[bool]] = []
    modes = [r.mode for r in table]
    action = ClassAction(group, cls)
    complexes: Dict[int, PresentationComplex] = {}

    def complex_at(m: int) -> PresentationComplex:
        if m not in complexes:
            complexes[m] = fox_complex(group, cls, m, action=action)
        return complexes[m]

    for n in n_values:
        if not d or n + d > n_max:
            ranks.append(None)
            bijective.append(None)
            continue
        result = stabilization_u_map(
            group, cls, p, n, descriptor, source=complex_at(n), target=complex_at(n + d),
            betti_values=(by_n[n].get(p), by_n[n + d].get(p)),
        )
        complexes.pop(n, None)
        ranks.append(result.rank)
        bijective.append(result.bijective)
        if result.mode == CertificationMode.MODULAR.value:
            modes[n_values.index(n)] = result.mode

    quotient_betti = invariant = None
    if quotient_by_G:
        quotient_betti = [r.get(p) for r in betti_table(group, cls, n_min, n_max, True, jobs)]
        invariant = [invariant_dim(group, cls, p, n) for n in n_values]
        if quotient_betti != invariant:
            raise ComputationError(
                "G-quotient Betti numbers differ from the G-invariant dimensions",
                {"quotient": quotient_betti, "invariant": invariant},
            )

    return StabilityReport(
        p=p, n_values=n_values, betti=[r.get(p) for r in table], deg_U=d,
        u_map_ranks=ranks, bijective=bijective, observed_n0=observed_n0(n_values, bijective),
        orbit_counts=orbit_counts, G_invariant_betti=quotient_betti, invariant_dims=invariant,
        certification=modes,
    )
