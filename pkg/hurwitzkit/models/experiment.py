"""Experiment configuration and report models."""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class ExperimentKind(str, Enum):
    """Experiment kinds runnable from a config file."""
    ORBITS = "orbits"
    RING = "ring"
    KCOMPLEX = "kcomplex"
    HOMOLOGY = "homology"
    CL_SAMPLE = "cl-sample"
    SP_CHECK = "sp-check"
    FF_CENSUS = "ff-census"


class CertificationMode(str, Enum):
    """How the ranks behind a table were obtained."""
    EXACT = "exact"
    MODULAR = "modular-certified"
    NOT_APPLICABLE = "n/a"


# Result anchors a report may cite, keyed by reference label; every anchor resolves to one of these.
ANCHORS: Dict[str, str] = {
    "§2.3": "braid orbits on c^n and their invariants",
    "eq:relation": "ring of components and the relation r_g r_h = r_{ghg^-1} r_g",
    "Prop. pr:cp1": "central element U_D stabilizing the components",
    "Lemma le:rurfinite": "R/U_D R vanishes in large degree",
    "Lemma le:dihedralnonsplitting": "non-splitting hypothesis on (G, c)",
    "Eq. koszuldef": "K-complex of a graded R-module",
    "Lemma le:koszulhomologyispuny": "right multiplication by r_g is null-homotopic on K(R)",
    "Prop. pr:K(r)": "H_q(K(R)) is concentrated in bounded degree",
    "Theorem Koszulbound": "deg H_q(K(M)) <= max(h_0, h_1) + A q",
    "Theorem th:stability": "U: H_p(n) -> H_p(n + deg U) is eventually an isomorphism",
    "Corollary co:modgstability": "stability after taking G-invariants",
    "Prop. Bettibound": "b_p bounded by the cell count",
    "§8 μ": "Cohen-Lenstra mass of A and its moment characterization",
    "§8 β": "sum over B != A of |Sur(B,A)|/|Aut B|",
    "Lemma enhomlem": "surjection counts bounded by epsilon times the average over enlarged targets",
    "Corollary cor:kluners": "truncated moment identity",
    "Lemma sp-la": "Sp(V) acts transitively on GSp_q-fixed surjections",
    "§1.7": "q^n - q^(n-1) monic squarefree polynomials",
    "Prop. pr:hypjac": "class groups of y^2 = f as Jacobians over F_q",
    "Theorem th:weakcl": "average of m_A over imaginary quadratic fields",
}


class ExperimentConfig(BaseModel):
    """A parsed experiment file."""
    kind: ExperimentKind = Field(..., description="Experiment kind")
    params: Dict[str, str] = Field(default_factory=dict, description="Raw key/value parameters")
    seed: int = Field(default=0)
    out_dir: Optional[str] = Field(None)

    class Config:
        use_enum_values = True

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()


class Report(BaseModel):
    """Everything a run writes, minus timing."""
    kind: str = Field(...)
    tool_version: str = Field(...)
    config: Dict[str, Any] = Field(..., description="Echo of the experiment parameters")
    seed: int = Field(...)
    certification: str = Field(default=CertificationMode.EXACT.value)
    anchors: List[str] = Field(default_factory=list)
    columns: List[str] = Field(default_factory=list, description="CSV header")
    rows: List[Dict[str, Any]] = Field(default_factory=list)
    summary: Dict[str, Any] = Field(default_factory=dict)

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        """Create from dictionary."""
        return cls(**data)
