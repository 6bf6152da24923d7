"""The acceptance suite run by ``hurwitzkit verify``."""

import logging
import time
from typing import Callable, List, NamedTuple, Optional, Tuple

from ..braids import ComponentRing, components_stable, find_stabilizer_U
from ..cohen_lenstra import moments_from_groups, sample_batch, symplectic_orbit_check
from ..cohen_lenstra.measure import eta
from ..core.errors import AcceptanceError, HurwitzKitError
from ..function_field import cl_census, enumerate_sf, expected_squarefree_count
from ..groups import is_nonsplitting, is_rational_class, load_pair
from ..hurwitz import stability_report
from ..koszul import GradedModule, build_k_complex, h0_matches, homotopy_check, k_homology
from ..models.abelian import AbelianLGroupType

logger = logging.getLogger(__name__)


class CriterionResult(NamedTuple):
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float


Check = Callable[[bool], Tuple[bool, str]]


def squarefree_counts(quick: bool) -> Tuple[bool, str]:
    bad = []
    for q in (3, 5, 7):
        for n in range(0, (4 if quick else 6) + 1):
            count = enumerate_sf(q, n).count
            if count != expected_squarefree_count(q, n):
                bad.append((q, n, count))
    return not bad, f"mismatches: {bad}" if bad else "all counts exact"


def nonsplitting_gate(quick: bool) -> Tuple[bool, str]:
    cases = [
        ("S3", "(1 2)", True, True),
        ("dihedral(3; 2)", "involution", True, True),
        ("S4", "(1 2)", False, True),
        ("A4", "(1 2 3)", True, False),
    ]
    details = []
    ok = True
    for group_spec, rep, want_split_ok, want_rational in cases:
        group, cls = load_pair(group_spec, rep)
        verdict = is_nonsplitting(group, cls)
        passed = verdict.ok == want_split_ok
        if not want_split_ok:
            passed = passed and verdict.witness is not None
        if verdict.ok and not want_rational:
            passed = passed and not is_rational_class(group, cls)
        ok = ok and passed
        details.append(f"{group_spec}: nonsplitting={verdict.ok}")
    return ok, "; ".join(details)


def component_stabilization(quick: bool) -> Tuple[bool, str]:
    group, cls = load_pair("S3", "(1 2)")
    descriptor = find_stabilizer_U(group, cls, d_max=4, n_max=8 if quick else 12)
    ok = descriptor.found and descriptor.D <= 4 and components_stable(descriptor)
    return ok, f"D={descriptor.D}, deg U={descriptor.deg_U}, tail={descriptor.verified_range}"


def k_complex_identities(quick: bool) -> Tuple[bool, str]:
    details = []
    for group_spec, rep, n_max in (("S3", "(1 2)", 5 if quick else 8), ("Z2", "(1 2)", 6 if quick else 10)):
        group, cls = load_pair(group_spec, rep)
        ring = ComponentRing(group, cls)
        R = GradedModule.from_ring(ring, n_max + 1)
        for n in range(n_max + 1):
            build_k_complex(R, n).check()
        for n in range(n_max):
            for q in range(n + 1):
                for g in cls.members:
                    homotopy_check(ring, int(g), n, q, module=R)
        if not h0_matches(k_homology(R, n_max)):
            return False, f"{group_spec}: H_0(K(R)) differs from R/R_+R"
        details.append(f"{group_spec} through n={n_max}")
    return True, "; ".join(details)


def k_degree_bound(quick: bool) -> Tuple[bool, str]:
    group, cls = load_pair("S3", "(1 2)")
    n_max = 6 if quick else 8
    report = k_homology(GradedModule.from_ring(ComponentRing(group, cls), n_max), n_max)
    if report.censored:
        return False, f"censored q = {report.censored}"
    windows = [a for a in report.a1_by_window if a is not None]
    last = max(report.h[q] for q in report.h if report.h[q] is not None)
    tail = report.a1_by_window[last:]
    ok = report.a1_surrogate is not None and all(a == tail[0] for a in tail)
    return ok, f"A1 surrogate {report.a1_surrogate}, by window {windows}"


def homological_stability(quick: bool) -> Tuple[bool, str]:
    group, cls = load_pair("S3", "(1 2)")
    n_max = 5 if quick else 7
    zero = stability_report(group, cls, 0, 2, n_max)
    one = stability_report(group, cls, 1, 2, n_max)
    top = [b for b in one.bijective if b is not None]
    ok = zero.observed_n0 is not None and zero.observed_n0 <= 5 and bool(top) and top[-1]
    return ok, f"b0={zero.betti}, b1={one.betti}, n0(p=0)={zero.observed_n0}, p=1 top bijective={top[-1] if top else None}"


def cl_moments(quick: bool) -> Tuple[bool, str]:
    samples = 10_000 if quick else 100_000
    batch = sample_batch(8, 3, samples, seed=0, e_cap=4)
    details = []
    ok = True
    for partition in ((1,), (2,), (1, 1)):
        A = AbelianLGroupType(l=3, partition=partition)
        est = moments_from_groups(A, batch.groups)
        within = abs(est.mean - 1) <= 3 * est.stderr
        ok = ok and within
        details.append(f"{A.label()}: {est.mean:.4f} ± {est.stderr:.4f}")
    trivial = batch.masses().get((), 0.0)
    target = eta(3).value
    ok = ok and abs(trivial - target) <= 0.01
    details.append(f"P[trivial]={trivial:.4f} (mu {target:.4f}, complement {1 - target:.4f})")
    return ok, "; ".join(details)


def symplectic_orbits(quick: bool) -> Tuple[bool, str]:
    res = symplectic_orbit_check(2, 3, 1, AbelianLGroupType(l=3, partition=(1,)), 2)
    return res.nonempty and res.transitive, f"|Sp|={res.group_order}, |O|={res.fixed}, orbits={res.orbit_count}"


def class_group_census(quick: bool) -> Tuple[bool, str]:
    A = AbelianLGroupType(l=3, partition=(1,))
    details = []
    ok = True
    for n in ((3,) if quick else (3, 5)):
        records, summary = cl_census(7, n, 3, [A], seed=0, jobs=1 if quick else 8)
        passed = summary.failures == 0 and summary.within_slack[A.label()]
        ok = ok and passed
        details.append(f"n={n}: {summary.curves} curves, avg m={summary.avg_mA[A.label()]:.4f}, "
                       f"|avg-1|={summary.deviation[A.label()]:.4f} <= {summary.slack:.4f}")
    return ok, "; ".join(details)


def determinism(quick: bool) -> Tuple[bool, str]:
    A = AbelianLGroupType(l=3, partition=(1,))
    serial = cl_census(5, 3, 3, [A], seed=7, jobs=1)
    parallel = cl_census(5, 3, 3, [A], seed=7, jobs=2)
    same_census = [r.model_dump() for r in serial[0]] == [r.model_dump() for r in parallel[0]]
    samples = 2 * 10_000 + 17
    same_samples = sample_batch(6, 3, samples, 3, jobs=1).groups == sample_batch(6, 3, samples, 3, jobs=2).groups
    return same_census and same_samples, f"census identical={same_census}, sampler identical={same_samples}"


CRITERIA: List[Tuple[str, Check]] = [
    ("squarefree census", squarefree_counts),
    ("non-splitting gate", nonsplitting_gate),
    ("component stabilization", component_stabilization),
    ("K-complex identities", k_complex_identities),
    ("K(R) degree bound", k_degree_bound),
    ("homological stability", homological_stability),
    ("Cohen-Lenstra moments", cl_moments),
    ("symplectic orbit", symplectic_orbits),
    ("function-field census", class_group_census),
    ("determinism", determinism),
]


def run_criteria(quick: bool = False, only: Optional[List[int]] = None) -> List[CriterionResult]:
    """Run the criteria (1-based numbers in ``only``) and collect their outcomes."""
    results = []
    for number, (name, check) in enumerate(CRITERIA, start=1):
        if only and number not in only:
            continue
        started = time.perf_counter()
        try:
            passed, detail = check(quick)
        except HurwitzKitError as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        results.append(CriterionResult(number, name, bool(passed), detail, time.perf_counter() - started))
        logger.info(f"[{number}] {name}: {'pass' if passed else 'FAIL'} ({detail})")
    return results


def verify(quick: bool = False, only: Optional[List[int]] = None) -> List[CriterionResult]:
    """Raise AcceptanceError when any selected criterion fails."""
    results = run_criteria(quick, only)
    failed = [r for r in results if not r.passed]
    if failed:
        raise AcceptanceError(
            f"{len(failed)} acceptance criteria failed: {', '.join(r.name for r in failed)}",
            {"failed": [r.number for r in failed]},
        )
    return results
