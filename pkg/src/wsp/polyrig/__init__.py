"""Exact polynomial engine and the deformation equations of the two families."""
from .equations import (
    base_equations,
    divisor,
    family_initial_forms,
    initial_forms,
    matrix_symbols,
    pfaffian_matrix,
    quadratic_cone_check,
    quadratic_cone_data,
    rhs_equations,
    same_up_to_sign,
    verify_smoothing_solution,
    verify_syzygies_family1,
)
from .pfaffian import SkewMatrix5, sub_pfaffians
from .poly import Polynomial, parse, resultant

__all__ = [
    "Polynomial", "SkewMatrix5", "base_equations", "divisor", "family_initial_forms",
    "initial_forms", "matrix_symbols", "parse", "pfaffian_matrix", "quadratic_cone_check",
    "quadratic_cone_data", "resultant", "rhs_equations", "same_up_to_sign", "sub_pfaffians",
    "verify_smoothing_solution", "verify_syzygies_family1",
]
