"""
The limit of the embedding along curves x = (t xi1, t xi2, t xi3, 1 + t xi4)
as t -> 0.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..algebra import MPoly, VarContext, parse_rational_list
from ..embedding import Proj39, build_embedding_table
from ..errors import IdentityFailure, InadmissibleDirection

logger = logging.getLogger(__name__)

XIT = VarContext("xit", ("xi1", "xi2", "xi3", "xi4", "t"))
T = VarContext("t", ("t",))


class LimitDirection:
    """A direction (xi1, xi2, xi3, xi4) of approach to the point (0, 0, 0, 1)."""

    __slots__ = ("xi",)

    def __init__(self, values: Sequence):
        values = tuple(Fraction(v) for v in values)
        if len(values) != 4:
            raise ValueError(f"A direction has 4 coordinates, got {len(values)}")
        self.xi = values

    @classmethod
    def parse(cls, text: str) -> "LimitDirection":
        return cls(parse_rational_list(text, 4))

    def __iter__(self):
        return iter(self.xi)

    def __repr__(self) -> str:
        return "LimitDirection(" + ", ".join(str(v) for v in self.xi) + ")"


def _curve_rows(images: Sequence[MPoly]) -> List[MPoly]:
    table = build_embedding_table()
    context = images[0].context
    factors = {name: poly.substitute(images, context) for name, poly in table.factors.items()}
    rows = []
    for sign, names in table.rows:
        row = context.const(sign)
        for name in names:
            row = row * factors[name]
        rows.append(row)
    return rows


def _leading(rows: Sequence[MPoly]):
    orders = [r.low_degree("t") for r in rows if not r.is_zero]
    if not orders:
        raise InadmissibleDirection("The curve lies in the zero set of every coordinate")
    order = min(orders)
    return order, [r.coeff_in("t", order) for r in rows]


class GenericLimit(BaseModel):
    """Leading t-order and leading vector over a generic direction."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    order: int
    common_factor: MPoly
    point: Proj39

    def to_json(self) -> Dict:
        return {
            "order": self.order,
            "common_factor": self.common_factor.to_text(),
            "point": self.point.to_json(),
        }


@lru_cache(maxsize=1)
def generic_limit() -> GenericLimit:
    """Expand the 40 coordinates along the curve with symbolic xi.

    Every nonzero leading coefficient is a rational multiple of one common
    polynomial in xi, so the limit does not depend on the direction.

    Raises:
        IdentityFailure: If two leading coefficients are not proportional
    """
    xi1, xi2, xi3, xi4, t = XIT.gens()
    order, leading = _leading(_curve_rows([t * xi1, t * xi2, t * xi3, 1 + t * xi4]))
    first = next(l for l in leading if not l.is_zero)
    lc = first.leading_coefficient()
    vector = []
    for j, l in enumerate(leading, start=1):
        if l.is_zero:
            vector.append(Fraction(0))
            continue
        ratio = l.leading_coefficient() / lc
        if l != first.scale(ratio):
            raise IdentityFailure(f"Leading coefficient of y{j} is not proportional to the others", index=j)
        vector.append(ratio)
    logger.info("Generic limit has t-order %d and common factor %s", order, first.to_text())
    return GenericLimit(order=order, common_factor=first.primitive()[1], point=Proj39(vector))


def limit_point(xi: LimitDirection) -> Proj39:
    """The limit of phi(t xi1, t xi2, t xi3, 1 + t xi4) as t -> 0.

    Raises:
        InadmissibleDirection: If the generic leading vector vanishes at xi
    """
    if not isinstance(xi, LimitDirection):
        xi = LimitDirection(xi)
    (t,) = T.gens()
    images = [t.scale(xi.xi[0]), t.scale(xi.xi[1]), t.scale(xi.xi[2]), 1 + t.scale(xi.xi[3])]
    order, leading = _leading(_curve_rows(images))
    expected = generic_limit().order
    if order != expected:
        raise InadmissibleDirection(
            f"Leading coefficients vanish along {xi}: t-order {order} instead of {expected}"
        )
    return Proj39([l.constant_term() for l in leading])


def random_directions(rng: np.random.RandomState, count: int, bound: int = 9) -> List[LimitDirection]:
    directions = []
    for _ in range(count):
        nums = rng.randint(-bound, bound + 1, size=4)
        dens = rng.randint(1, 5, size=4)
        directions.append(LimitDirection([Fraction(int(n), int(d)) for n, d in zip(nums, dens)]))
    return directions


def limit_constancy(samples: int = 10, seed: int = 0) -> Dict:
    """Compare limit points along random directions with the generic limit."""
    expected = generic_limit().point
    rng = np.random.RandomState(seed)
    checked, skipped, differing = 0, 0, 0
    for xi in random_directions(rng, samples):
        try:
            point = limit_point(xi)
        except InadmissibleDirection:
            skipped += 1
            continue
        checked += 1
        if point != expected:
            logger.warning("Limit along %s differs from the generic limit", xi)
            differing += 1
    return {"checked": checked, "skipped": skipped, "differing": differing}
