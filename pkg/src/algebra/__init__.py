"""
Exact arithmetic: rationals, multivariate polynomials, rational functions,
factored forms and linear algebra over Q.
"""

from .polynomials import (
    MPoly,
    VarContext,
    format_rational,
    parse_rational,
    parse_rational_list,
    univar_gcd,
)
from .rational_functions import RatFunc, RationalMap, compose_poly
from .factored import Factored
from .linalg import QMatrix, in_row_span, poly_det, primitive_integer_vector

__all__ = [
    "MPoly",
    "VarContext",
    "RatFunc",
    "RationalMap",
    "Factored",
    "QMatrix",
    "compose_poly",
    "format_rational",
    "in_row_span",
    "parse_rational",
    "parse_rational_list",
    "poly_det",
    "primitive_integer_vector",
    "univar_gcd",
]
