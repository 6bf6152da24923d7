"""Homology of Hurwitz spaces in degrees 0 and 1."""

from .fox import (
    PresentationComplex, StateSpace, CellBlock, braid_relators, relator_count, fox_complex,
    prefix_chain_maps, conjugation_chain_maps, check_chain_map,
)
from .betti import BettiResult, betti, betti_all, betti_table, cell_bound, complex_betti
from .stability import (
    UMapResult, induced_rank, stabilization_u_map, invariant_dim, observed_n0, stability_report,
)
from .homology_module import homology_module

__all__ = [
    "PresentationComplex", "StateSpace", "CellBlock", "braid_relators", "relator_count",
    "fox_complex", "prefix_chain_maps", "conjugation_chain_maps", "check_chain_map",
    "BettiResult", "betti", "betti_all", "betti_table", "cell_bound", "complex_betti",
    "UMapResult", "induced_rank", "stabilization_u_map", "invariant_dim", "observed_n0",
    "stability_report", "homology_module",
]
