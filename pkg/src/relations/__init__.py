"""
Defining equations of the image variety: the linear orbit, the pivot
expressions, the two-term cubic orbit and membership testing.
"""

from .linear import (
    G,
    PIVOTS,
    PRINTED_PIVOT_EXPRESSIONS,
    PivotBasis,
    Y,
    linear_orbit,
    linear_relation_basis,
    parse_linear,
    printed_pivot_basis,
)
from .cubic import (
    PRINTED_CUBICS,
    ReducedCubicSpan,
    TwoTermCubic,
    check_printed_cubics,
    cubic_relation_set,
    printed_cubic,
    reduced_cubics,
    sample_vanishing,
    span_is_stable,
    vanishes_under_embedding,
)
from .membership import MembershipVerdict, membership

__all__ = [
    "G",
    "PIVOTS",
    "PRINTED_CUBICS",
    "PRINTED_PIVOT_EXPRESSIONS",
    "MembershipVerdict",
    "PivotBasis",
    "ReducedCubicSpan",
    "TwoTermCubic",
    "Y",
    "check_printed_cubics",
    "cubic_relation_set",
    "linear_orbit",
    "linear_relation_basis",
    "membership",
    "parse_linear",
    "printed_cubic",
    "printed_pivot_basis",
    "reduced_cubics",
    "sample_vanishing",
    "span_is_stable",
    "vanishes_under_embedding",
]
