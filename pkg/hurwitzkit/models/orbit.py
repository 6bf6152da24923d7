"""Braid orbit records."""

from typing import Tuple

from pydantic import BaseModel, Field


class OrbitRecord(BaseModel):
    """One braid orbit on c^n, i.e. one component of the Hurwitz space."""
    n: int = Field(..., description="Number of branch points")
    orbit_id: int = Field(..., description="Position in canonical representative order")
    size: int = Field(..., description="Number of tuples in the orbit")
    boundary: int = Field(..., description="Element index of g_1 ... g_n")
    monodromy_subgroup_id: int = Field(..., description="Id of <g_1, ..., g_n> in the subgroup list")
    nielsen_id: int = Field(default=0, description="Id of the class multiset of the entries")
    canonical_rep: Tuple[int, ...] = Field(..., description="Lexicographically least tuple, as element indices")

    def to_row(self) -> dict:
        return {
            "n": self.n,
            "orbit_id": self.orbit_id,
            "size": self.size,
            "boundary_elt": self.boundary,
            "monodromy_subgroup_id": self.monodromy_subgroup_id,
            "nielsen_id": self.nielsen_id,
            "canonical_rep": " ".join(str(g) for g in self.canonical_rep),
        }
