"""Degreewise homology of K(M) over a window of total degrees."""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Tuple

from ..linalg.complexes import homology_dims_certified
from ..linalg.rank import rank_certified
from ..linalg.sparse import SparseMatrix
from ..models.experiment import CertificationMode
from ..models.koszul import KHomologyReport
from .complex import build_k_complex
from .module import GradedModule

logger = logging.getLogger(__name__)


def _degree_homology(args: Tuple[GradedModule, int]) -> Tuple[List[int], str]:
    M, n = args
    return homology_dims_certified(build_k_complex(M, n))


def h0_quotient_dims(M: GradedModule, n_max: int) -> List[int]:
    """dim (M / R_{>0} M)_n = dim M_n - rank of ⊕_g r_g: M_{n-1} -> M_n."""
    out = [M.dims[0]]
    for n in range(1, n_max + 1):
        blocks = [M.action(p, n - 1) for p in range(len(M.cls))]
        stacked = blocks[0].hstack(*blocks[1:]) if blocks else SparseMatrix.zeros(M.dims[n], 0)
        out.append(M.dims[n] - rank_certified(stacked, M.group.order).rank)
    return out


def degree_table(dims: List[List[int]], window: int) -> Tuple[Dict[int, Optional[int]], List[int]]:
    """h_q and censored q for the window n <= ``window``."""
    h: Dict[int, Optional[int]] = {}
    censored = []
    for q in range(window + 1):
        nonzero = [n for n in range(q, window + 1) if dims[n][q]]
        h[q] = max(nonzero) if nonzero else None
        if dims[window][q]:
            censored.append(q)
    return h, censored


def a1_surrogate(h: Dict[int, Optional[int]], censored: List[int]) -> Optional[int]:
    values = [hq - q for q, hq in h.items() if hq is not None and q not in censored]
    return max(values) if values else None


def k_homology(M: GradedModule, n_max: int, jobs: int = 1) -> KHomologyReport:
    """dim H_q(K(M)) for 0 <= q <= n <= n_max.

    Nonzero homology at n = n_max is reported as censored (its degree is
    only known to be at least n_max).
    """
    tasks = [(M, n) for n in range(n_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_degree_homology, tasks))
    else:
        results = [_degree_homology(t) for t in tasks]

    dims = [r[0] for r in results]
    modes = {r[1] for r in results}
    h, censored = degree_table(dims, n_max)
    by_window = []
    for window in range(n_max + 1):
        hw, cw = degree_table(dims, window)
        by_window.append(a1_surrogate(hw, cw))
    mode = CertificationMode.MODULAR.value if CertificationMode.MODULAR.value in modes else CertificationMode.EXACT.value
    report = KHomologyReport(
        module_tag=M.tag,
        n_max=n_max,
        dims=dims,
        h=h,
        censored=censored,
        a1_surrogate=a1_surrogate(h, censored),
        a1_by_window=by_window,
        h0_quotient_dims=h0_quotient_dims(M, n_max),
        certification=mode,
    )
    logger.info(f"K({M.tag}) through degree {n_max}: censored q = {censored}")
    return report


def h0_matches(report: KHomologyReport) -> bool:
    """H_0(K(M)) agrees dimensionwise with M / R_{>0} M."""
    return [row[0] for row in report.dims] == report.h0_quotient_dims
