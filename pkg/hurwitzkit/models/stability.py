"""Stabilization descriptors and homological stability reports."""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field


class StabilizerDescriptor(BaseModel):
    """The central element U_D and the window over which it stabilizes R."""
    found: bool = Field(..., description="Whether some D <= D_max gave a long enough zero tail")
    D: int = Field(..., description="Multiplier in U_D = sum of r_g^(D|g|)")
    deg_U: int = Field(..., description="Degree D * ord(c)")
    verified_range: Tuple[int, int] = Field(..., description="[n_0, N_max] with zero quotient")
    quotient_dims: List[int] = Field(..., description="dim (R/U_D R)_n for n = 0 .. N_max")
    orbit_counts: List[int] = Field(default_factory=list, description="dim R_n for n = 0 .. N_max")
    generating_counts: List[int] = Field(default_factory=list, description="|S_n(G)| for n = 0 .. N_max")
    certification: str = Field(default="exact")
    tried: List[int] = Field(default_factory=list, description="Values of D examined")

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()


class StabilityReport(BaseModel):
    """Betti numbers b_p(n) and the U-map on H_p over a window of n."""
    p: int = Field(..., description="Homological degree, 0 or 1")
    n_values: List[int] = Field(..., description="Window of n")
    betti: List[int] = Field(..., description="b_p(n) over the window")
    deg_U: int = Field(...)
    u_map_ranks: List[Optional[int]] = Field(..., description="Rank of H_p(n) -> H_p(n + deg U); None past the window")
    bijective: List[Optional[bool]] = Field(...)
    observed_n0: Optional[int] = Field(None, description="Least n from which every computed U-map is bijective")
    orbit_counts: List[int] = Field(default_factory=list, description="Braid orbit counts for the dual-path b_0 check")
    G_invariant_betti: Optional[List[int]] = Field(None, description="b_p of Hur/G over the window")
    invariant_dims: Optional[List[int]] = Field(None, description="dim H_p(n)^G by averaging, for comparison")
    certification: List[str] = Field(default_factory=list, description="Per-n rank certification mode")

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return self.model_dump()
