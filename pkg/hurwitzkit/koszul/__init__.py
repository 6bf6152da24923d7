"""The K-complex of graded R-modules."""

from .module import GradedModule
from .complex import build_k_complex, k_differential, words
from .homotopy import homotopy_check, homotopy_matrix, right_multiplication_matrix
from .report import k_homology, h0_quotient_dims, h0_matches, degree_table

__all__ = [
    "GradedModule", "build_k_complex", "k_differential", "words",
    "homotopy_check", "homotopy_matrix", "right_multiplication_matrix",
    "k_homology", "h0_quotient_dims", "h0_matches", "degree_table",
]
