"""
The embedding on degenerate configurations: six points on a conic and the
limit point at (0, 0, 0, 1).
"""

from .prolongation import (
    PROLONG_TABLE,
    PointZ,
    ProlongTable,
    Z,
    conic_vanishes,
    fifteen_products,
    identity_holds_at,
    match_products,
    orbit_membership,
    perfect_matchings,
    prolong_table,
    prolongation_check,
    prolonged_phi,
    random_z_points,
    span_check,
    verify_prolong_table,
    z_to_x,
    z_to_x_map,
)
from .limit import GenericLimit, LimitDirection, generic_limit, limit_constancy, limit_point, random_directions

__all__ = [
    "PROLONG_TABLE",
    "GenericLimit",
    "LimitDirection",
    "PointZ",
    "ProlongTable",
    "Z",
    "conic_vanishes",
    "fifteen_products",
    "generic_limit",
    "identity_holds_at",
    "limit_constancy",
    "limit_point",
    "match_products",
    "orbit_membership",
    "perfect_matchings",
    "prolong_table",
    "prolongation_check",
    "prolonged_phi",
    "random_directions",
    "random_z_points",
    "span_check",
    "verify_prolong_table",
    "z_to_x",
    "z_to_x_map",
]
