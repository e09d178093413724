"""
The embedding written with minors of a 3x6 matrix.

A configuration of six points in the plane is a 3x6 matrix up to GL3 on the
left and column scaling on the right. Split labels give
``D_abc D_def Q`` and pair cycles ``(ab,cd,ef)`` give
``D_acd D_bcd D_cef D_def D_eab D_fab``, with Q the determinant of the
conic matrix and minors taken in the written column order.
"""
import itertools
import logging
from fractions import Fraction
from typing import List, Sequence

from ..algebra import MPoly, QMatrix, parse_rational_list, poly_det
from ..errors import ConstructionFailure, DegenerateMatrix
from ..roots import Label, coordinate_labels
from .projective import Proj39
from .table import X, PointM

logger = logging.getLogger(__name__)


def _conic_row(column: Sequence) -> List:
    a, b, c = column
    return [a * b, b * c, c * a, a * a, b * b, c * c]


def _det3(columns: Sequence[Sequence]):
    (a, b, c), (d, e, f), (g, h, i) = columns
    return a * (e * i - f * h) - d * (b * i - c * h) + g * (b * f - c * e)


class Matrix36:
    """A 3x6 matrix with exact rational entries; columns are the six points."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = [[Fraction(e) for e in row] for row in rows]
        if len(rows) != 3 or any(len(row) != 6 for row in rows):
            raise ValueError("A configuration matrix is 3x6")
        self.rows = rows

    @classmethod
    def parse(cls, text: str) -> "Matrix36":
        """Parse 18 comma separated rationals, row-major."""
        values = parse_rational_list(text, 18)
        return cls([values[0:6], values[6:12], values[12:18]])

    def column(self, j: int) -> List[Fraction]:
        """Column j (1-based)."""
        return [row[j - 1] for row in self.rows]

    def minor(self, i: int, j: int, k: int) -> Fraction:
        """D_ijk: determinant of columns i, j, k in that order (1-based)."""
        return _det3([self.column(i), self.column(j), self.column(k)])

    def conic_determinant(self) -> Fraction:
        """Determinant of the 6x6 matrix of quadratic monomials of the columns."""
        columns = [_conic_row(self.column(j)) for j in range(1, 7)]
        return QMatrix(columns).det()

    def check(self) -> None:
        """Raise DegenerateMatrix if three points are collinear or all six lie on a conic."""
        for i, j, k in itertools.combinations(range(1, 7), 3):
            if self.minor(i, j, k) == 0:
                raise DegenerateMatrix(f"Minor D{i}{j}{k} vanishes")
        if self.conic_determinant() == 0:
            raise DegenerateMatrix("The six points lie on a conic")

    def left_multiply(self, g: Sequence[Sequence]) -> "Matrix36":
        return Matrix36((QMatrix(g) @ QMatrix(self.rows)).rows)

    def scale_columns(self, h: Sequence) -> "Matrix36":
        return Matrix36([[e * Fraction(s) for e, s in zip(row, h)] for row in self.rows])

    def swap_columns(self, i: int, j: int) -> "Matrix36":
        order = list(range(6))
        order[i - 1], order[j - 1] = order[j - 1], order[i - 1]
        return Matrix36([[row[k] for k in order] for row in self.rows])


def matrix_from_point(point: Sequence) -> Matrix36:
    """The normalized matrix with columns e1, e2, e3, (1,1,1), (1,x1,x3), (1,x2,x4)."""
    x1, x2, x3, x4 = point
    return Matrix36([
        [1, 0, 0, 1, 1, 1],
        [0, 1, 0, 1, x1, x2],
        [0, 0, 1, 1, x3, x4],
    ])


def label_minors(label: Label) -> List[tuple]:
    """The minors whose product (times Q for splits) gives y_label."""
    if label.kind == "split":
        return [label.parts[0], label.parts[1]]
    (a, b), (c, d), (e, f) = label.parts
    return [(a, c, d), (b, c, d), (c, e, f), (d, e, f), (e, a, b), (f, a, b)]


def matrix_coordinates(matrix: Matrix36) -> List[Fraction]:
    """The 40 minor products y_a(A), not yet projectivized."""
    conic = matrix.conic_determinant()
    values = []
    for label in coordinate_labels():
        value = Fraction(1)
        for indices in label_minors(label):
            value *= matrix.minor(*indices)
        if label.kind == "split":
            value *= conic
        values.append(value)
    return values


def phi_from_matrix(matrix: Matrix36) -> Proj39:
    """The embedding computed from the 3x6 matrix.

    Raises:
        DegenerateMatrix: If a minor or the conic determinant vanishes
    """
    matrix.check()
    return Proj39(matrix_coordinates(matrix))


def normalize_matrix(matrix: Matrix36) -> PointM:
    """Bring a matrix to the normal form of the chart and read off (x1, x2, x3, x4).

    The first three columns become the unit vectors, the fourth (1,1,1), and
    the last two are scaled to first coordinate 1.

    Raises:
        DegenerateMatrix: If the normal form does not exist
    """
    head = QMatrix([row[:3] for row in matrix.rows])
    if head.det() == 0:
        raise DegenerateMatrix("The first three points are collinear")
    reduced = matrix.left_multiply(head.inverse().rows)
    fourth = reduced.column(4)
    if any(v == 0 for v in fourth):
        raise DegenerateMatrix("The fourth point lies on a line through two of the first three")
    reduced = reduced.left_multiply([[1 / fourth[0], 0, 0], [0, 1 / fourth[1], 0], [0, 0, 1 / fourth[2]]])
    fifth, sixth = reduced.column(5), reduced.column(6)
    if fifth[0] == 0 or sixth[0] == 0:
        raise DegenerateMatrix("A point lies on the line through the second and third points")
    return PointM([fifth[1] / fifth[0], sixth[1] / sixth[0], fifth[2] / fifth[0], sixth[2] / sixth[0]])


# Column transpositions realized by the maps s1..s5
COLUMN_TRANSPOSITIONS = {
    "s1": (1, 2),
    "s2": (2, 3),
    "s3": (3, 4),
    "s4": (4, 5),
    "s5": (5, 6),
}


def column_transposition_check(points: Sequence[PointM]) -> dict:
    """Compare s1..s5 with swapping two columns and renormalizing.

    Returns:
        Map generator name -> True when the two agree at every point
    """
    from .generators import generator_map

    results = {}
    for name, (i, j) in COLUMN_TRANSPOSITIONS.items():
        gmap = generator_map(name)
        results[name] = all(
            list(normalize_matrix(matrix_from_point(p).swap_columns(i, j))) == gmap(p)
            for p in points
        )
    return results


def conic_constant(q: MPoly) -> Fraction:
    """The constant k with conic determinant = k * Q on the normalized matrix.

    Raises:
        ConstructionFailure: If the two are not proportional
    """
    x1, x2, x3, x4 = X.gens()
    one, zero = X.one(), X.zero()
    columns = [
        (one, zero, zero), (zero, one, zero), (zero, zero, one),
        (one, one, one), (one, x1, x3), (one, x2, x4),
    ]
    conic = [_conic_row(c) for c in columns]
    rows = [[conic[j][i] for j in range(6)] for i in range(6)]
    det = poly_det(rows)
    constant = det.leading_coefficient() / q.leading_coefficient()
    if det != q.scale(constant):
        raise ConstructionFailure("The conic determinant is not a multiple of Q")
    return constant
