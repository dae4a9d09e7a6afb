"""Exact Laurent polynomials in one variable and matrices over them."""

from .linalg import (
    det_poly, integer_smith, minors_gcd, module_order, rank_over_fraction_field,
    smith_diagonal_over_rationals,
)
from .matrix import IntMatrix, PolyMatrix
from .poly import (
    T, LaurentPoly, UndefinedDegree, gcd_laurent, gcd_many, is_monic, is_symmetric, is_unit,
    normalize_unit, span_degree,
)
