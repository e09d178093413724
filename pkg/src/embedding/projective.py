"""
Projective points with exact coordinates.
"""
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..algebra import primitive_integer_vector
from ..errors import Undefined, ZeroVector


def _is_rational(value) -> bool:
    return isinstance(value, (int, Fraction)) or getattr(value, "is_rational", False)


def _to_fraction(value) -> Fraction:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return value.to_fraction()


class ProjectivePoint:
    """A point of projective space in canonical coordinates.

    Rational points are stored as coprime integers whose first nonzero entry
    is positive. Points with coordinates in a quadratic field are divided by
    their first nonzero coordinate; if that leaves only rationals the integer
    form is used, so both kinds compare equal when they describe one point.
    """

    __slots__ = ("coords",)

    def __init__(self, values: Sequence):
        values = list(values)
        pivot = next((v for v in values if v != 0), None)
        if pivot is None:
            raise ZeroVector("A projective point needs a nonzero coordinate")
        if not all(_is_rational(v) for v in values):
            if isinstance(pivot, int):
                pivot = Fraction(pivot)
            values = [v / pivot for v in values]
        if all(_is_rational(v) for v in values):
            self.coords: Tuple = primitive_integer_vector([_to_fraction(v) for v in values])
        else:
            self.coords = tuple(values)

    @property
    def is_rational(self) -> bool:
        return all(isinstance(c, int) for c in self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, index):
        return self.coords[index]

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.to_json())})"

    def project(self, indices: Sequence[int]) -> "ProjectivePoint":
        """Linear projection onto the given coordinates (0-based).

        Raises:
            Undefined: If all selected coordinates vanish
        """
        values = [self.coords[i] for i in indices]
        if all(v == 0 for v in values):
            raise Undefined(f"Projection to coordinates {list(indices)} is undefined at this point")
        return ProjectivePoint(values)

    def to_json(self) -> List:
        if self.is_rational:
            return list(self.coords)
        return [c.to_json() if hasattr(c, "to_json") else str(c) for c in self.coords]


class Proj39(ProjectivePoint):
    """A point of P^39 in the coordinates y1..y40."""

    __slots__ = ()

    def __init__(self, values: Sequence):
        values = list(values)
        if len(values) != 40:
            raise ValueError(f"Points of P^39 have 40 coordinates, got {len(values)}")
        super().__init__(values)
