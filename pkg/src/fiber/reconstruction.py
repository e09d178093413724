"""
Reconstruction of the two points over a base of the projection to
(y1 : y3 : y4 : y5 : y7).
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ..algebra import MPoly
from ..embedding import Proj39, eval_phi, generator_map, projection_p4
from ..errors import DegenerateQuadratic, NonGeneric
from ..relations import membership, printed_pivot_basis
from .elimination import BaseField5, build_qq_dd, solve_g8_g9_g6
from .quadratic_field import QuadraticElement, sqrt_rational

logger = logging.getLogger(__name__)


def _plain(value):
    if isinstance(value, QuadraticElement) and value.is_rational:
        return value.to_fraction()
    return value


def dd_roots(dd: MPoly) -> Tuple[Tuple, Fraction, int]:
    """Roots of dd (a quadratic in s with rational coefficients).

    Returns:
        (roots, discriminant, d) where the roots are Fractions or elements
        of Q(sqrt d); d is 1 for a square discriminant

    Raises:
        DegenerateQuadratic: If the s**2 coefficient vanishes
    """
    a, b, c = (dd.coeff_in("s", k).constant_term() for k in (2, 1, 0))
    if a == 0:
        raise DegenerateQuadratic("dd is not quadratic in s")
    discriminant = b * b - 4 * a * c
    _, d = sqrt_rational(discriminant)
    root = QuadraticElement.sqrt(discriminant)
    roots = tuple(_plain((-b + sign * root) / (2 * a)) for sign in (1, -1))
    return roots, discriminant, d


class FiberSolution(BaseModel):
    """The two points of P^39 over one base."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    base: BaseField5
    discriminant: Fraction
    d: int
    s_values: Tuple
    t_values: Tuple
    points: Tuple[Proj39, Proj39]
    double_root: bool = False
    relations_satisfied: Optional[bool] = None

    @property
    def is_rational(self) -> bool:
        return self.d == 1

    def to_json(self) -> Dict:
        return {
            "base": self.base.to_json(),
            "discriminant": str(self.discriminant),
            "d": self.d,
            "double_root": self.double_root,
            "s": [_text(v) for v in self.s_values],
            "t": [_text(v) for v in self.t_values],
            "points": [p.to_json() for p in self.points],
            "relations_satisfied": self.relations_satisfied,
        }


def _text(value):
    return value.to_json() if isinstance(value, QuadraticElement) else str(value)


def reconstruct_fiber(base: BaseField5, check_relations: bool = True) -> FiberSolution:
    """Solve dd for s, cube_11 for t and the closed forms for g6, g8, g9.

    Args:
        base: A numeric base (g1, ..., g5)
        check_relations: Evaluate every orbit relation at both points

    Raises:
        NonGeneric: If a guard fails or a11 vanishes at a root of dd
        DegenerateQuadratic: If dd is not quadratic in s
    """
    if base.is_symbolic:
        raise ValueError("Fibers are reconstructed over numeric bases")
    data = build_qq_dd(base, full=False)
    roots, discriminant, d = dd_roots(data.dd)
    a11, b11 = data.cube_11
    pivots = printed_pivot_basis()
    g1, g2, g3, g4, g5 = base.values
    t_values, points = [], []
    for s in roots:
        a = a11.evaluate([s, 0])
        if a == 0:
            raise NonGeneric(f"a11 vanishes at the root s = {s}")
        t = _plain(-b11.evaluate([s, 0]) / a)
        g6, g8, g9 = solve_g8_g9_g6(base, s, t)
        values = pivots.expand([g1, g2, g3, g4, g5, g6, s, g8, g9, t])
        t_values.append(t)
        points.append(Proj39(values))
    solution = FiberSolution(
        base=base,
        discriminant=Fraction(discriminant),
        d=int(d),
        s_values=tuple(roots),
        t_values=tuple(t_values),
        points=tuple(points),
        double_root=discriminant == 0,
    )
    if solution.double_root:
        logger.warning("dd has a double root at %s: the fiber collapses", base.to_json())
    if check_relations:
        solution.relations_satisfied = all(membership(p).member for p in points)
    return solution


def fiber_coordinates(point: Sequence) -> Tuple[BaseField5, object, object]:
    """(base, s, t) of a point of P^39 in its own scaling (s = y12, t = y19)."""
    return BaseField5.from_point(point), point[11], point[18]


def point_on_quadrics(point: Sequence) -> Dict[str, bool]:
    """Whether dd and qq vanish at the point's own (s, t)."""
    base, s, t = fiber_coordinates(point)
    data = build_qq_dd(base, full=False)
    return {"dd": data.dd.evaluate([s, t]) == 0, "qq": data.qq.evaluate([s, t]) == 0}


def fiber_round_trip(x: Sequence) -> Dict:
    """Reconstruct the fiber through phi(x) and compare with {phi(x), phi(sr x)}."""
    phi = eval_phi(x)
    base = BaseField5(projection_p4(phi).coords)
    expected = {phi, eval_phi(generator_map("sr")(list(x)))}
    solution = reconstruct_fiber(base, check_relations=False)
    found = set(solution.points)
    return {
        "matches": found == expected,
        "distinct": len(found) == 2,
        "expected_distinct": len(expected) == 2,
    }


def conjugate_point(point: Proj39) -> List:
    """Coordinates with sqrt(d) replaced by -sqrt(d)."""
    return [c.conjugate() if isinstance(c, QuadraticElement) else c for c in point.coords]
