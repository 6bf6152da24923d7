"""Random l-adic cokernels and Monte Carlo moments.

Random streams are Philox generators keyed by (seed, stream index), so a
batch of samples is the same whether it is drawn serially or in parallel.
"""

import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.config import get_config
from ..core.errors import SaturationError, ValidationError
from ..linalg.smith import local_smith_valuations
from ..models.abelian import AbelianLGroupType
from .abelian import groups_up_to, sur_count

logger = logging.getLogger(__name__)

STREAM_SIZE = 10_000


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, stream])))


class CokernelDraw(NamedTuple):
    group: Tuple[int, ...]
    e_used: int
    escalations: int


def draw_cokernel(N: int, l: int, e_cap: int, rng: np.random.Generator) -> CokernelDraw:
    """One cokernel of a uniform N x N matrix over Z_l, refined until unsaturated.

    On saturation the matrix is extended to A + l^e B with B uniform modulo
    l^step, which is uniform modulo l^(e + step) and agrees with A mod l^e.
    """
    if N < 1:
        raise ValidationError(f"N must be >= 1, got {N}")
    if e_cap < 1:
        raise ValidationError(f"e_cap must be >= 1, got {e_cap}")
    settings = get_config().sampler
    e = e_cap
    matrix = rng.integers(0, l ** e, size=(N, N), dtype=np.int64)
    for escalation in range(settings.saturation_retry_cap + 1):
        smith = local_smith_valuations(matrix, l, e)
        if not smith.saturated:
            return CokernelDraw(smith.cokernel_partition(), e, escalation)
        if escalation == settings.saturation_retry_cap:
            break
        step = settings.e_cap_step
        matrix = matrix + l ** e * rng.integers(0, l ** step, size=(N, N), dtype=np.int64)
        e += step
    raise SaturationError("Cokernel stays saturated after the retry cap",
                          {"N": N, "l": l, "e": e, "retry_cap": settings.saturation_retry_cap})


def sample_cokernel(N: int, l: int, e_cap: int,
                    rng_seed: Union[int, np.random.Generator]) -> AbelianLGroupType:
    """The cokernel of a random map Z_l^N -> Z_l^N as an abelian l-group type."""
    rng = make_rng(rng_seed) if isinstance(rng_seed, (int, np.integer)) else rng_seed
    return AbelianLGroupType(l=l, partition=draw_cokernel(N, l, e_cap, rng).group)


def _stream_job(args) -> Tuple[List[Tuple[int, ...]], int]:
    N, l, e_cap, seed, stream, count = args
    rng = make_rng(seed, stream)
    draws = [draw_cokernel(N, l, e_cap, rng) for _ in range(count)]
    return [d.group for d in draws], sum(d.escalations for d in draws)


class SampleBatch(NamedTuple):
    l: int
    N: int
    e_cap: int
    seed: int
    groups: List[Tuple[int, ...]]
    escalations: int

    def masses(self) -> Dict[Tuple[int, ...], float]:
        counts = Counter(self.groups)
        return {g: c / len(self.groups) for g, c in sorted(counts.items())}


def sample_batch(N: int, l: int, samples: int, seed: int, e_cap: Optional[int] = None,
                 jobs: int = 1) -> SampleBatch:
    """``samples`` cokernels drawn in fixed streams of STREAM_SIZE."""
    if samples < 1:
        raise ValidationError(f"samples must be >= 1, got {samples}")
    e_cap = e_cap or get_config().sampler.e_cap
    tasks = []
    for stream, start in enumerate(range(0, samples, STREAM_SIZE)):
        tasks.append((N, l, e_cap, seed, stream, min(STREAM_SIZE, samples - start)))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_stream_job, tasks))
    else:
        results = [_stream_job(t) for t in tasks]
    groups = [g for part, _ in results for g in part]
    escalations = sum(e for _, e in results)
    if escalations:
        logger.info(f"{escalations} of {samples} draws needed a larger modulus")
    return SampleBatch(l, N, e_cap, seed, groups, escalations)


class MomentEstimate(NamedTuple):
    mean: float
    stderr: float
    samples: int


def moments_from_groups(A: AbelianLGroupType, groups: Sequence[Tuple[int, ...]]) -> MomentEstimate:
    """Mean and standard error of |Sur(X, A)| over sampled X."""
    if A.is_trivial:
        return MomentEstimate(1.0, 0.0, len(groups))
    counts = Counter(groups)
    values = np.zeros(len(counts), dtype=np.float64)
    weights = np.zeros(len(counts), dtype=np.float64)
    for i, (g, c) in enumerate(sorted(counts.items())):
        values[i] = sur_count(AbelianLGroupType(l=A.l, partition=g), A)
        weights[i] = c
    n = weights.sum()
    mean = float((values * weights).sum() / n)
    var = float((weights * (values - mean) ** 2).sum() / (n - 1)) if n > 1 else 0.0
    return MomentEstimate(mean, math.sqrt(var / n), int(n))


def moment_estimate(A: AbelianLGroupType, N: int, samples: int, rng_seed: int,
                    e_cap: Optional[int] = None, jobs: int = 1) -> MomentEstimate:
    """Empirical E|Sur(X, A)| for X the cokernel of a random N x N l-adic matrix."""
    if A.is_trivial:
        return MomentEstimate(1.0, 0.0, samples)
    batch = sample_batch(N, A.l, samples, rng_seed, e_cap, jobs)
    return moments_from_groups(A, batch.groups)


class StabilityCheck(NamedTuple):
    ok: bool
    deviations: Dict[str, Tuple[float, float, float]]


def stability_check(l: int, N: int, samples: int, seed: int, max_size: int = 3,
                    e_cap: Optional[int] = None, jobs: int = 1, z: float = 3.0) -> StabilityCheck:
    """Empirical masses at N and N + 2 agree within z binomial standard errors.

    ``deviations`` maps each group label to (mass at N, mass at N + 2, allowed gap).
    """
    first = sample_batch(N, l, samples, seed, e_cap, jobs).masses()
    second = sample_batch(N + 2, l, samples, seed + 1, e_cap, jobs).masses()
    ok = True
    deviations = {}
    for A in groups_up_to(l, max_size):
        p1, p2 = first.get(A.partition, 0.0), second.get(A.partition, 0.0)
        allowed = z * math.sqrt((p1 * (1 - p1) + p2 * (1 - p2)) / samples) + 1.0 / samples
        deviations[A.label()] = (p1, p2, allowed)
        if abs(p1 - p2) > allowed:
            ok = False
            logger.warning(f"Mass of {A.label()} moves from {p1:.4f} to {p2:.4f} between N={N} and N={N + 2}")
    return StabilityCheck(ok, deviations)
