"""Class group records for hyperelliptic function fields."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from .abelian import AbelianLGroupType


class ClassGroupRecord(BaseModel):
    """One quadratic extension F_q(t)(sqrt f) with its Jacobian data."""
    curve_id: int = Field(..., description="Position in enumeration order")
    coefficients: List[int] = Field(..., description="Coefficients of f, highest degree first")
    twisted: bool = Field(default=False, description="True when f is c0 times a monic polynomial")
    h: Optional[int] = Field(None, description="Jacobian order over F_q")
    l_part: Optional[AbelianLGroupType] = Field(None)
    m_A: Dict[str, int] = Field(default_factory=dict, description="Surjection counts keyed by target label")
    error: Optional[str] = Field(None, description="Failure message for quarantined curves")

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_row(self, targets: List[AbelianLGroupType]) -> dict:
        row = {
            "curve_id": self.curve_id,
            "f": " ".join(str(c) for c in self.coefficients),
            "h": "" if self.h is None else self.h,
            "l_part": "" if self.l_part is None else self.l_part.key(),
        }
        for target in targets:
            row[f"m_{target.key()}"] = self.m_A.get(target.label(), "")
        return row


class CensusSummary(BaseModel):
    """Aggregate of a class group census over one squarefree family."""
    q: int = Field(...)
    n: int = Field(..., description="Degree of f; the genus is (n - 1) / 2")
    l: int = Field(...)
    c0: int = Field(..., description="The nonsquare used for the twisted half of the family")
    curves: int = Field(..., description="Number of curves in the family")
    failures: int = Field(default=0, description="Quarantined curves")
    avg_mA: Dict[str, float] = Field(default_factory=dict, description="Average m_A keyed by target label")
    deviation: Dict[str, float] = Field(default_factory=dict, description="|avg m_A - 1|")
    slack: float = Field(..., description="C / sqrt(q)")
    within_slack: Dict[str, bool] = Field(default_factory=dict)
    l_part_distribution: Dict[str, float] = Field(default_factory=dict, description="Empirical mass keyed by partition key")
    mu_masses: Dict[str, float] = Field(default_factory=dict, description="Cohen-Lenstra masses of the observed types")
    tv_distance_to_mu: float = Field(..., description="Total variation distance, unobserved mu mass included")
    warnings: List[str] = Field(default_factory=list)

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()
