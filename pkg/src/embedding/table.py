"""
The 40 coordinate polynomials y1..y40 of the embedding in the chart (x1..x4).

Each y_a is a signed product of base factors taken from the discriminant
D(x); storing the factor names instead of expanded polynomials keeps the
factored form available for the transformation identities.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..algebra import Factored, MPoly, VarContext, parse_rational_list
from ..errors import ConstructionFailure, DegeneratePoint
from ..roots import Label, coordinate_labels
from .projective import ProjectivePoint, Proj39

logger = logging.getLogger(__name__)

X = VarContext("x", ("x1", "x2", "x3", "x4"))

BASE_FACTORS = {
    "D1": "x1*x4 - x2*x3",
    "D2": "x1*x4 - x4 + x2 - x2*x3 + x3 - x1",
    "Q": "-x1*x2*x3 - x2*x3*x4 + x2*x3 + x1*x2*x4 + x1*x3*x4 - x1*x4",
    "x1": "x1",
    "x2": "x2",
    "x3": "x3",
    "x4": "x4",
    "x1-1": "x1 - 1",
    "x2-1": "x2 - 1",
    "x3-1": "x3 - 1",
    "x4-1": "x4 - 1",
    "x2-x1": "x2 - x1",
    "x3-x1": "x3 - x1",
    "x4-x2": "x4 - x2",
    "x4-x3": "x4 - x3",
}

# Sign and base factors of y1..y40
Y_TABLE: Tuple[Tuple[int, Tuple[str, ...]], ...] = (
    (1, ("D1", "Q")),
    (1, ("D2", "Q")),
    (1, ("x2-x1", "Q")),
    (1, ("x3-x1", "Q")),
    (1, ("x4-x2", "Q")),
    (1, ("x4-x3", "Q")),
    (1, ("x1", "x4-1", "Q")),
    (1, ("x2", "x3-1", "Q")),
    (1, ("x3", "x2-1", "Q")),
    (1, ("x4", "x1-1", "Q")),
    (1, ("D1", "x1-1", "x2-1", "x4-x3")),
    (1, ("D1", "x1-1", "x3-1", "x4-x2")),
    (1, ("D1", "x2-1", "x4-1", "x3-x1")),
    (1, ("D1", "x3-1", "x4-1", "x2-x1")),
    (-1, ("D1", "x1", "x2-1", "x3-1")),
    (-1, ("D1", "x2", "x1-1", "x4-1")),
    (-1, ("D1", "x3", "x1-1", "x4-1")),
    (-1, ("D1", "x4", "x2-1", "x3-1")),
    (1, ("D2", "x2", "x3", "x1-1")),
    (1, ("D2", "x1", "x4", "x2-1")),
    (1, ("D2", "x1", "x4", "x3-1")),
    (1, ("D2", "x2", "x3", "x4-1")),
    (1, ("D2", "x1", "x2", "x4-x3")),
    (1, ("D2", "x1", "x3", "x4-x2")),
    (1, ("D2", "x2", "x4", "x3-x1")),
    (1, ("D2", "x3", "x4", "x2-x1")),
    (1, ("x1", "x2-1", "x3-1", "x4-x2", "x4-x3")),
    (1, ("x2", "x1-1", "x4-1", "x3-x1", "x4-x3")),
    (1, ("x3", "x1-1", "x4-1", "x2-x1", "x4-x2")),
    (1, ("x4", "x2-1", "x3-1", "x2-x1", "x3-x1")),
    (-1, ("x1", "x1-1", "x4-x2", "x4-x3")),
    (-1, ("x2", "x2-1", "x3-x1", "x4-x3")),
    (-1, ("x3", "x3-1", "x2-x1", "x4-x2")),
    (-1, ("x4", "x4-1", "x2-x1", "x3-x1")),
    (-1, ("x2", "x3", "x1-1", "x4-x2", "x4-x3")),
    (-1, ("x1", "x4", "x2-1", "x3-x1", "x4-x3")),
    (-1, ("x1", "x4", "x3-1", "x2-x1", "x4-x2")),
    (-1, ("x2", "x3", "x4-1", "x2-x1", "x3-x1")),
    (1, ("D1", "D2")),
    (1, ("x2-x1", "x3-x1", "x4-x2", "x4-x3")),
)

# D(x) as a product of fifteen factors
DISCRIMINANT_FACTORS = (
    "x1", "x2", "x3", "x4", "x1 - 1", "x2 - 1", "x3 - 1", "x4 - 1",
    "x1 - x2", "x1 - x3", "x2 - x4", "x3 - x4", "D1", "D2", "Q",
)

# Coordinates seen by the projection to P^4: y1, y3, y4, y5, y7
P4_INDICES = (0, 2, 3, 4, 6)


class EmbeddingTable:
    """The 40 embedding polynomials with their labels and factored forms."""

    def __init__(self):
        self.context = X
        self.labels: List[Label] = coordinate_labels()
        self.factors: Dict[str, MPoly] = {name: X.parse(text) for name, text in BASE_FACTORS.items()}
        self._factored_base = {name: Factored.from_poly(p) for name, p in self.factors.items()}
        self.rows = Y_TABLE
        self.polys: List[MPoly] = []
        for sign, names in self.rows:
            poly = X.const(sign)
            for name in names:
                poly = poly * self.factors[name]
            self.polys.append(poly)
        self.factored: List[Factored] = [
            Factored.product(X, (self._factored_base[n] for n in names)) * sign
            for sign, names in self.rows
        ]

    def __len__(self) -> int:
        return len(self.polys)

    def y(self, index: int) -> MPoly:
        """The polynomial y_index (1-based)."""
        return self.polys[index - 1]

    def label(self, index: int) -> Label:
        return self.labels[index - 1]

    def evaluate(self, point: Sequence) -> List:
        """Values of y1..y40 at a point; base factors are evaluated once."""
        values = {name: poly.evaluate(point) for name, poly in self.factors.items()}
        result = []
        for sign, names in self.rows:
            value = Fraction(sign)
            for name in names:
                value = value * values[name]
            result.append(value)
        return result

    def check(self) -> None:
        """Build-time invariants: nonzero rows and the sample linear identity.

        Raises:
            ConstructionFailure: If an invariant fails
        """
        if len(self.polys) != 40 or len(self.labels) != 40:
            raise ConstructionFailure("The embedding table must have 40 rows")
        if any(p.is_zero for p in self.polys):
            raise ConstructionFailure("Every embedding polynomial must be nonzero")
        if not (self.y(2) - self.y(1) + self.y(5) - self.y(4)).is_zero:
            raise ConstructionFailure("y2 - y1 + y5 - y4 must vanish identically")


@lru_cache(maxsize=1)
def build_embedding_table() -> EmbeddingTable:
    """Build the 40 polynomials of the embedding and check them once.

    The conic determinant of the normalized matrix is compared with the cubic
    Q of the chart at the same time.
    """
    table = EmbeddingTable()
    table.check()
    from .matrix import conic_constant
    constant = conic_constant(table.factors["Q"])
    logger.debug("Embedding table built; conic determinant = %s * Q", constant)
    return table


class PointM:
    """A point (x1, x2, x3, x4) of the chart."""

    __slots__ = ("x",)

    def __init__(self, values: Sequence):
        values = tuple(Fraction(v) for v in values)
        if len(values) != 4:
            raise ValueError(f"A point of M has 4 coordinates, got {len(values)}")
        self.x = values

    @classmethod
    def parse(cls, text: str) -> "PointM":
        return cls(parse_rational_list(text, 4))

    def __iter__(self):
        return iter(self.x)

    def __len__(self) -> int:
        return 4

    def __getitem__(self, index):
        return self.x[index]

    def __eq__(self, other) -> bool:
        return isinstance(other, PointM) and self.x == other.x

    def __hash__(self) -> int:
        return hash(self.x)

    def __repr__(self) -> str:
        return "PointM(" + ", ".join(str(v) for v in self.x) + ")"

    def is_generic(self) -> bool:
        return discriminant(self.x) != 0


def discriminant(x: Sequence) -> Fraction:
    """D(x); zero exactly when the six points are degenerate."""
    x1, x2, x3, x4 = (Fraction(v) for v in x)
    d1 = x1 * x4 - x2 * x3
    d2 = x1 * x4 - x4 + x2 - x2 * x3 + x3 - x1
    q = -x1 * x2 * x3 - x2 * x3 * x4 + x2 * x3 + x1 * x2 * x4 + x1 * x3 * x4 - x1 * x4
    value = x1 * x2 * x3 * x4 * (x1 - 1) * (x2 - 1) * (x3 - 1) * (x4 - 1)
    value *= (x1 - x2) * (x1 - x3) * (x2 - x4) * (x3 - x4)
    return value * d1 * d2 * q


def eval_phi(point: Sequence) -> Proj39:
    """The point of P^39 with coordinates y1(x):...:y40(x).

    Raises:
        DegeneratePoint: If D(x) = 0
    """
    x = tuple(point)
    if discriminant(x) == 0:
        raise DegeneratePoint(f"D(x) vanishes at x = {[str(v) for v in x]}")
    return Proj39(build_embedding_table().evaluate(x))


def projection_p4(point: ProjectivePoint) -> ProjectivePoint:
    """y1:y3:y4:y5:y7.

    Raises:
        Undefined: If the five coordinates vanish
    """
    return point.project(P4_INDICES)


def phi80(point: ProjectivePoint) -> List:
    """The 80 coordinates (y_a, y_-a) with y_-a = -y_a."""
    return list(point.coords) + [-c for c in point.coords]


def sample_points(rng: np.random.RandomState, count: int, bound: int = 12) -> List[PointM]:
    """Random rational points of M (numerators in [-bound, bound], denominators in [1, 6])."""
    points = []
    while len(points) < count:
        nums = rng.randint(-bound, bound + 1, size=4)
        dens = rng.randint(1, 7, size=4)
        x = [Fraction(int(n), int(d)) for n, d in zip(nums, dens)]
        if discriminant(x) != 0:
            points.append(PointM(x))
    return points
