"""K-complex homology reports."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class KHomologyReport(BaseModel):
    """dim H_q(K(M)) in each total degree n of a window."""
    module_tag: str = Field(..., description="R, R^k, or M1")
    n_max: int = Field(...)
    dims: List[List[int]] = Field(..., description="dims[n][q] for 0 <= q <= n <= n_max")
    h: Dict[int, Optional[int]] = Field(..., description="Largest n with H_q nonzero; None if H_q vanishes in the window")
    censored: List[int] = Field(default_factory=list, description="q with nonzero H_q at n = n_max, reported as >= n_max")
    a1_surrogate: Optional[int] = Field(None, description="max over uncensored q of h_q - q")
    a1_by_window: List[Optional[int]] = Field(default_factory=list, description="The same maximum for windows 0..m")
    h0_quotient_dims: List[int] = Field(default_factory=list, description="dim (M / R_{>0} M)_n computed directly")
    certification: str = Field(default="exact")

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()

    def rows(self) -> List[dict]:
        return [
            {"n": n, "q": q, "dim_Hq": d}
            for n, row in enumerate(self.dims)
            for q, d in enumerate(row)
        ]
