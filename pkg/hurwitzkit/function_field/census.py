"""Exhaustive class group census over the odd-degree squarefree family."""

import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

from ..cohen_lenstra.abelian import sur_count
from ..cohen_lenstra.measure import mu_mass
from ..cohen_lenstra.sampler import make_rng
from ..core.config import get_config
from ..core.errors import CensusFailure, HurwitzKitError, ValidationError
from ..models.abelian import AbelianLGroupType
from ..models.class_group import CensusSummary, ClassGroupRecord
from .curve import HyperellipticCurve
from .field import finite_field
from .polynomials import enumerate_sf
from .sylow import l_part_structure
from .zeta import check_annihilation, jacobian_order

logger = logging.getLogger(__name__)


def class_group_record(q: int, curve_id: int, f: Sequence[int], twisted: bool, l: int,
                       targets: Sequence[AbelianLGroupType], seed: int,
                       divisor_checks: Optional[int] = None) -> ClassGroupRecord:
    """Jacobian order, l-part and m_A for one curve; failures go into ``error``."""
    record = ClassGroupRecord(curve_id=curve_id, coefficients=list(f), twisted=twisted)
    divisor_checks = get_config().census.random_divisors if divisor_checks is None else divisor_checks
    try:
        curve = HyperellipticCurve(finite_field(q), tuple(f))
        rng = make_rng(seed, curve_id)
        zeta = jacobian_order(curve)
        check_annihilation(curve, zeta.h, rng, divisor_checks)
        l_part = l_part_structure(curve, l, zeta.h, rng)
        record.h = zeta.h
        record.l_part = l_part
        record.m_A = {A.label(): sur_count(l_part, A) for A in targets}
    except HurwitzKitError as e:
        logger.warning(f"Curve {curve_id} quarantined: {e}")
        record.error = str(e)
    return record


def _chunk_job(args) -> List[ClassGroupRecord]:
    q, l, targets, seed, rows = args
    return [class_group_record(q, cid, f, tw, l, targets, seed) for cid, f, tw in rows]


def validate_census(q: int, n: int, l: int, targets: Sequence[AbelianLGroupType]) -> List[str]:
    """Reject unusable parameters; returns the warnings that apply to valid ones."""
    if n < 1 or n % 2 == 0:
        raise ValidationError(f"n must be odd and positive, got {n}")
    if q % 2 == 0:
        raise ValidationError(f"q must be odd, got {q}")
    finite_field(q)
    if l % 2 == 0 or q % l == 0:
        raise ValidationError(f"l = {l} must be odd and prime to q = {q}")
    if not targets:
        raise ValidationError("targets must not be empty")
    for A in targets:
        if A.l != l:
            raise ValidationError(f"Target {A.label()} is not an abelian {l}-group")
    warnings = []
    if (q - 1) % l == 0:
        warnings.append(f"l = {l} divides q - 1 = {q - 1}: the limiting distribution "
                        f"differs from the Cohen-Lenstra distribution")
    return warnings


def summarize(q: int, n: int, l: int, c0: int, records: Sequence[ClassGroupRecord],
              targets: Sequence[AbelianLGroupType], warnings: List[str]) -> CensusSummary:
    """Order-independent aggregate of census records."""
    ok = [r for r in records if r.ok]
    census = get_config().census
    slack = census.slack_c / math.sqrt(q)
    avg, deviation, within = {}, {}, {}
    for A in targets:
        label = A.label()
        value = sum(r.m_A[label] for r in ok) / len(ok) if ok else float("nan")
        avg[label] = value
        deviation[label] = abs(value - 1)
        within[label] = deviation[label] <= slack

    counts = Counter(r.l_part.key() for r in ok)
    by_key = {r.l_part.key(): r.l_part for r in ok}
    distribution = {key: counts[key] / len(ok) for key in sorted(counts)}
    masses = {key: mu_mass(by_key[key]).value for key in sorted(counts)}
    unobserved = max(0.0, 1.0 - sum(masses.values()))
    tv = 0.5 * (sum(abs(distribution[k] - masses[k]) for k in distribution) + unobserved)

    return CensusSummary(
        q=q, n=n, l=l, c0=c0,
        curves=len(records),
        failures=len(records) - len(ok),
        avg_mA=avg,
        deviation=deviation,
        slack=slack,
        within_slack=within,
        l_part_distribution=distribution,
        mu_masses=masses,
        tv_distance_to_mu=tv,
        warnings=list(warnings),
    )


def cl_census(q: int, n: int, l: int, targets: Sequence[AbelianLGroupType], seed: int = 0,
              jobs: int = 1) -> Tuple[List[ClassGroupRecord], CensusSummary]:
    """Class group data for every curve y^2 = f, f in the odd-degree family.

    Curves are processed in chunks; each curve draws from its own random
    stream keyed by (seed, curve id), so the records do not depend on ``jobs``.
    """
    warnings = validate_census(q, n, l, targets)
    for w in warnings:
        logger.warning(w)
    family = enumerate_sf(q, n, leading="both")
    rows = list(family.curves())
    size = get_config().census.chunk_size
    targets = list(targets)
    tasks = [(q, l, targets, seed, rows[i:i + size]) for i in range(0, len(rows), size)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_chunk_job, tasks))
    else:
        chunks = [_chunk_job(t) for t in tasks]
    records = sorted((r for chunk in chunks for r in chunk), key=lambda r: r.curve_id)

    summary = summarize(q, n, l, family.c0, records, targets, warnings)
    limit = get_config().census.failure_fraction
    if summary.failures > limit * summary.curves:
        raise CensusFailure(
            f"{summary.failures} of {summary.curves} curves failed (limit {limit:.2%})",
            {"first_error": next(r.error for r in records if not r.ok)},
        )
    logger.info(f"Census q={q} n={n} l={l}: {summary.curves} curves, averages {summary.avg_mA}")
    return records, summary
