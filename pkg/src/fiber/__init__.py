"""
The generic fiber of the projection to (y1 : y3 : y4 : y5 : y7): closed
forms for g6, g8, g9, the quadratics qq and dd, and the two-point
reconstruction.
"""

from .quadratic_field import QuadraticElement, sqrt_rational, squarefree_decomposition
from .elimination import (
    BaseField5,
    QuadraticData,
    build_qq_dd,
    closed_forms,
    cube_basis,
    derived_dd,
    divisibility_check,
    divisibility_holds,
    random_bases,
    solve_g8_g9_g6,
    substitution_map,
    vanishing_cubics,
)
from .reconstruction import (
    FiberSolution,
    conjugate_point,
    dd_roots,
    fiber_coordinates,
    fiber_round_trip,
    point_on_quadrics,
    reconstruct_fiber,
)

__all__ = [
    "BaseField5",
    "FiberSolution",
    "QuadraticData",
    "QuadraticElement",
    "build_qq_dd",
    "closed_forms",
    "conjugate_point",
    "cube_basis",
    "dd_roots",
    "derived_dd",
    "divisibility_check",
    "divisibility_holds",
    "fiber_coordinates",
    "fiber_round_trip",
    "point_on_quadrics",
    "random_bases",
    "reconstruct_fiber",
    "solve_g8_g9_g6",
    "sqrt_rational",
    "squarefree_decomposition",
    "substitution_map",
    "vanishing_cubics",
]
