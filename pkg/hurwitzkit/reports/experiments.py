"""Experiment runners, one per experiment kind."""

import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, List, Optional, Type

from pydantic import BaseModel, Field, ValidationError as PydanticValidationError, field_validator

from .. import __version__
from ..braids import ComponentRing, central_check, components_stable, enumerate_orbits, find_stabilizer_U
from ..braids.orbits import prescribed_prefix_check
from ..cohen_lenstra import (
    beta_constant, enhom_bound_check, moments_from_groups, mu_mass, sample_batch, symplectic_orbit_check,
    trivial_mass_readings,
)
from ..core.config import get_config
from ..core.errors import ComputationError, ValidationError
from ..function_field import cl_census, validate_census
from ..groups import is_nonsplitting, is_rational_class, load_pair
from ..hurwitz import homology_module, stability_report
from ..koszul import GradedModule, build_k_complex, h0_matches, homotopy_check, k_homology
from ..models.abelian import AbelianLGroupType
from ..models.experiment import CertificationMode, ExperimentConfig, Report

logger = logging.getLogger(__name__)


def parse_targets(text: str, l: int) -> List[AbelianLGroupType]:
    """``;``-separated partitions, e.g. ``1; 2; 1,1`` for Z/l, Z/l^2 and (Z/l)^2."""
    parts = [t for t in (s.strip() for s in text.split(";")) if t]
    if not parts:
        raise ValidationError("targets must not be empty")
    return [AbelianLGroupType.parse(t, l) for t in parts]


class PairParams(BaseModel):
    """A group and a conjugacy class, as given on the command line."""
    group: str = Field(..., description="Preset name, spec text or path to a spec file")
    class_rep: str = Field(..., description="Cycle notation, #index or 'involution'")


class OrbitsParams(PairParams):
    n_min: int = Field(default=0, ge=0)
    n_max: int = Field(..., ge=0)


class RingParams(PairParams):
    n_max: int = Field(default=12, ge=1)
    d_max: int = Field(default=6, ge=1)
    central_n: int = Field(default=6, ge=0, description="Degree through which U_D is checked to be central")


class KComplexParams(PairParams):
    n_max: int = Field(..., ge=0)
    module: str = Field(default="R", description="R, free or M1")
    copies: int = Field(default=2, ge=1)
    homotopy: bool = Field(default=True)

    @field_validator("module")
    @classmethod
    def _check_module(cls, value: str) -> str:
        if value not in ("R", "free", "M1"):
            raise ValueError(f"module must be R, free or M1, got {value!r}")
        return value


class HomologyParams(PairParams):
    p: int = Field(default=0)
    n_min: int = Field(default=2, ge=2)
    n_max: int = Field(..., ge=2)
    quotient_by_G: bool = Field(default=False)

    @field_validator("p")
    @classmethod
    def _check_p(cls, value: int) -> int:
        if value not in (0, 1):
            raise ValueError("p must be 0 or 1")
        return value


class ClSampleParams(BaseModel):
    l: int = Field(default=3, ge=3)
    N: int = Field(default=8, ge=1)
    samples: int = Field(default=100_000, ge=1)
    e_cap: Optional[int] = Field(None, ge=1)
    targets: str = Field(..., description="Partitions separated by ';'")
    epsilon: Optional[str] = Field(None, description="Run the enhom bound check with this epsilon")
    test_cap: int = Field(default=3 ** 5)


class SpCheckParams(BaseModel):
    g: int = Field(default=2, ge=1)
    l: int = Field(default=3, ge=3)
    e: int = Field(default=1, ge=1)
    target: str = Field(default="1")
    q_residue: int = Field(default=2)


class FfCensusParams(BaseModel):
    q: int = Field(..., ge=3)
    n: int = Field(..., ge=1)
    l: int = Field(default=3, ge=3)
    targets: str = Field(default="1")


class Experiment(ABC):
    """One experiment kind: validates its parameters, then computes a Report."""

    kind: str = ""
    params_model: Type[BaseModel] = BaseModel
    anchors: List[str] = []

    def __init__(self, config: ExperimentConfig, jobs: int = 1):
        self.config = config
        self.jobs = jobs
        try:
            self.params = self.params_model(**config.params)
        except PydanticValidationError as e:
            first = e.errors()[0]
            field = ".".join(str(x) for x in first["loc"])
            raise ValidationError(f"Invalid parameter {field!r} for {self.kind}: {first['msg']}")
        self.prepare()

    def prepare(self) -> None:
        """Resolve presets and other references; runs before any computation."""

    @abstractmethod
    def compute(self) -> Report:
        """Run the experiment."""

    def report(self, columns: List[str], rows: List[Dict[str, Any]], summary: Dict[str, Any],
               certification: str = CertificationMode.NOT_APPLICABLE.value) -> Report:
        return Report(
            kind=self.kind,
            tool_version=__version__,
            config=self.params.model_dump(),
            seed=self.config.seed,
            certification=certification,
            anchors=list(self.anchors),
            columns=columns,
            rows=rows,
            summary=summary,
        )


class _PairExperiment(Experiment):
    def prepare(self) -> None:
        self.group, self.cls = load_pair(self.params.group, self.params.class_rep)


class OrbitsExperiment(_PairExperiment):
    kind = "orbits"
    params_model = OrbitsParams
    anchors = ["§2.3"]

    def prepare(self) -> None:
        super().prepare()
        if self.params.n_min > self.params.n_max:
            raise ValidationError(f"Empty window [{self.params.n_min}, {self.params.n_max}]")

    def compute(self) -> Report:
        rows, counts, generating, prefix = [], {}, {}, {}
        for n in range(self.params.n_min, self.params.n_max + 1):
            table = enumerate_orbits(self.group, self.cls, n)
            if not table.spot_check(seed=self.config.seed):
                raise ComputationError("Orbit labels are not braid invariant", {"n": n})
            rows.extend(r.to_row() for r in table.records())
            counts[n] = len(table)
            generating[n] = table.generating_count
            prefix[n] = prescribed_prefix_check(table)[0]
        columns = ["n", "orbit_id", "size", "boundary_elt", "monodromy_subgroup_id", "nielsen_id", "canonical_rep"]
        summary = {"orbit_counts": counts, "generating_counts": generating, "prescribed_prefix": prefix}
        return self.report(columns, rows, summary)


class RingExperiment(_PairExperiment):
    kind = "ring"
    params_model = RingParams
    anchors = ["eq:relation", "Prop. pr:cp1", "Lemma le:rurfinite", "Lemma le:dihedralnonsplitting"]

    def compute(self) -> Report:
        p = self.params
        ring = ComponentRing(self.group, self.cls)
        descriptor = find_stabilizer_U(self.group, self.cls, d_max=p.d_max, n_max=p.n_max, ring=ring)
        central = None
        if descriptor.D:
            central = central_check(ring, ring.u_element(descriptor.D), min(p.central_n, p.n_max))
        rows = [
            {
                "n": n,
                "dim_R": descriptor.orbit_counts[n],
                "quotient_dim": descriptor.quotient_dims[n] if n < len(descriptor.quotient_dims) else None,
                "generating": descriptor.generating_counts[n],
            }
            for n in range(p.n_max + 1)
        ]
        summary = {
            "descriptor": descriptor.to_dict(),
            "central": central,
            "components_stable": components_stable(descriptor) if descriptor.found else None,
            "rational": is_rational_class(self.group, self.cls),
        }
        return self.report(["n", "dim_R", "quotient_dim", "generating"], rows, summary, descriptor.certification)


class KComplexExperiment(_PairExperiment):
    kind = "kcomplex"
    params_model = KComplexParams
    anchors = ["Eq. koszuldef", "Lemma le:koszulhomologyispuny", "Prop. pr:K(r)", "Theorem Koszulbound"]

    def _module(self, ring: ComponentRing) -> GradedModule:
        p = self.params
        if p.module == "M1":
            return homology_module(self.group, self.cls, p.n_max)
        base = GradedModule.from_ring(ring, p.n_max + 1)
        return base.free(p.copies) if p.module == "free" else base

    def compute(self) -> Report:
        p = self.params
        ring = ComponentRing(self.group, self.cls)
        M = self._module(ring)
        M.check_relation()
        for n in range(M.top + 1):
            build_k_complex(M, n).check()
        homotopy = None
        if p.homotopy and p.module == "R":
            R = GradedModule.from_ring(ring, p.n_max + 1)
            for n in range(p.n_max):
                for q in range(n + 1):
                    for g in self.cls.members:
                        homotopy_check(ring, int(g), n, q, module=R)
            homotopy = True
        result = k_homology(M, p.n_max, jobs=self.jobs)
        summary = {
            "module": result.module_tag,
            "h": result.h,
            "censored": result.censored,
            "a1_surrogate": result.a1_surrogate,
            "a1_by_window": result.a1_by_window,
            "h0_quotient_dims": result.h0_quotient_dims,
            "h0_matches": h0_matches(result),
            "homotopy": homotopy,
        }
        return self.report(["n", "q", "dim_Hq"], result.rows(), summary, result.certification)


class HomologyExperiment(_PairExperiment):
    kind = "homology"
    params_model = HomologyParams
    anchors = ["Theorem th:stability", "Prop. Bettibound"]

    def prepare(self) -> None:
        super().prepare()
        if self.params.n_min > self.params.n_max:
            raise ValidationError(f"Empty window [{self.params.n_min}, {self.params.n_max}]")
        if self.params.quotient_by_G:
            self.anchors = self.anchors + ["Corollary co:modgstability"]

    def compute(self) -> Report:
        p = self.params
        result = stability_report(self.group, self.cls, p.p, p.n_min, p.n_max,
                                  quotient_by_G=p.quotient_by_G, jobs=self.jobs)
        rows = []
        for i, n in enumerate(result.n_values):
            rows.append({
                "n": n,
                "betti": result.betti[i],
                "u_map_rank": result.u_map_ranks[i],
                "bijective": result.bijective[i],
                "orbit_count": result.orbit_counts[i],
                "quotient_betti": result.G_invariant_betti[i] if result.G_invariant_betti else None,
                "invariant_dim": result.invariant_dims[i] if result.invariant_dims else None,
                "certification": result.certification[i],
            })
        modes = set(result.certification)
        mode = CertificationMode.MODULAR.value if CertificationMode.MODULAR.value in modes else CertificationMode.EXACT.value
        summary = {"p": p.p, "deg_U": result.deg_U, "observed_n0": result.observed_n0}
        columns = ["n", "betti", "u_map_rank", "bijective", "orbit_count", "quotient_betti",
                   "invariant_dim", "certification"]
        return self.report(columns, rows, summary, mode)


class ClSampleExperiment(Experiment):
    kind = "cl-sample"
    params_model = ClSampleParams
    anchors = ["§8 μ", "§8 β", "Corollary cor:kluners"]

    def prepare(self) -> None:
        self.targets = parse_targets(self.params.targets, self.params.l)
        if self.params.epsilon is not None:
            self.anchors = self.anchors + ["Lemma enhomlem"]

    def compute(self) -> Report:
        p = self.params
        batch = sample_batch(p.N, p.l, p.samples, self.config.seed, p.e_cap, self.jobs)
        rows = []
        for A in self.targets:
            est = moments_from_groups(A, batch.groups)
            rows.append({
                "target": A.key(),
                "mean_sur": est.mean,
                "stderr": est.stderr,
                "z": abs(est.mean - 1) / est.stderr if est.stderr else 0.0,
                "mu_mass": mu_mass(A).value,
            })
        masses = batch.masses()
        trivial = masses.get((), 0.0)
        summary = {
            "samples": p.samples,
            "escalations": batch.escalations,
            "trivial_fraction": trivial,
            "trivial_mass_readings": trivial_mass_readings(p.l),
            "beta": beta_constant(p.l).value,
            "distribution": {AbelianLGroupType(l=p.l, partition=g).key(): m for g, m in masses.items()},
        }
        if p.epsilon is not None:
            enhom = {}
            for A in self.targets:
                res = enhom_bound_check(A, Fraction(p.epsilon), p.test_cap)
                enhom[A.key()] = {"holds": res.holds, "s": res.s, "c_A": res.c_A, "checked": res.checked}
            summary["enhom"] = enhom
        return self.report(["target", "mean_sur", "stderr", "z", "mu_mass"], rows, summary)


class SpCheckExperiment(Experiment):
    kind = "sp-check"
    params_model = SpCheckParams
    anchors = ["Lemma sp-la"]

    def prepare(self) -> None:
        self.target = AbelianLGroupType.parse(self.params.target, self.params.l)

    def compute(self) -> Report:
        p = self.params
        res = symplectic_orbit_check(p.g, p.l, p.e, self.target, p.q_residue)
        row = {"g": p.g, "l": p.l, "e": p.e, "target": self.target.key(), "q_residue": p.q_residue,
               **res._asdict()}
        return self.report(list(row), [row], {"transitive": res.transitive, "nonempty": res.nonempty})


class FfCensusExperiment(Experiment):
    kind = "ff-census"
    params_model = FfCensusParams
    anchors = ["§1.7", "Prop. pr:hypjac", "Theorem th:weakcl", "§8 μ"]

    def prepare(self) -> None:
        self.targets = parse_targets(self.params.targets, self.params.l)
        validate_census(self.params.q, self.params.n, self.params.l, self.targets)

    def compute(self) -> Report:
        p = self.params
        records, summary = cl_census(p.q, p.n, p.l, self.targets, self.config.seed, self.jobs)
        columns = ["curve_id", "f", "h", "l_part"] + [f"m_{A.key()}" for A in self.targets]
        rows = [r.to_row(self.targets) for r in records]
        return self.report(columns, rows, summary.to_dict())


ALL_EXPERIMENTS: List[Type[Experiment]] = [
    OrbitsExperiment, RingExperiment, KComplexExperiment, HomologyExperiment,
    ClSampleExperiment, SpCheckExperiment, FfCensusExperiment,
]
