"""
Exact linear algebra over Q backed by sympy's ``DomainMatrix``.
"""
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .polynomials import MPoly, Scalar, from_qq, to_qq


def _to_domain(rows: Sequence[Sequence[Scalar]], ncols: int = None) -> DomainMatrix:
    rows = [list(row) for row in rows]
    ncols = len(rows[0]) if rows else (ncols or 0)
    return DomainMatrix([[to_qq(e) for e in row] for row in rows], (len(rows), ncols), QQ)


def _from_domain(matrix: DomainMatrix) -> List[List[Fraction]]:
    return [[from_qq(e) for e in row] for row in matrix.to_list()]


def primitive_integer_vector(vector: Sequence[Scalar]) -> Tuple[int, ...]:
    """Scale a rational vector to coprime integers with first nonzero entry positive.

    The zero vector is returned unchanged (as integers).
    """
    values = [Fraction(v) for v in vector]
    nonzero = [v for v in values if v]
    if not nonzero:
        return tuple(0 for _ in values)
    denom = reduce(lambda a, b: a * b // gcd(a, b), (v.denominator for v in nonzero), 1)
    ints = [int(v * denom) for v in values]
    common = reduce(gcd, (abs(i) for i in ints if i), 0)
    ints = [i // common for i in ints]
    if next(i for i in ints if i) < 0:
        ints = [-i for i in ints]
    return tuple(ints)


class QMatrix:
    """A dense matrix with exact rational entries."""

    def __init__(self, rows: Sequence[Sequence[Scalar]], ncols: int = None):
        self.rows = [[Fraction(e) for e in row] for row in rows]
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(row) != self.ncols for row in self.rows):
            raise ValueError("All rows of a matrix must have the same length")

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), self.ncols

    def _domain(self) -> DomainMatrix:
        return _to_domain(self.rows, self.ncols)

    def transpose(self) -> "QMatrix":
        return QMatrix([list(col) for col in zip(*self.rows)], ncols=len(self.rows))

    def rank(self) -> int:
        if not self.rows or not self.ncols:
            return 0
        return self._domain().rank()

    def rref(self) -> Tuple["QMatrix", Tuple[int, ...]]:
        """Reduced row echelon form and pivot columns."""
        if not self.rows or not self.ncols:
            return QMatrix(self.rows, self.ncols), ()
        reduced, pivots = self._domain().rref()
        return QMatrix(_from_domain(reduced)), tuple(pivots)

    def nullspace(self) -> List[Tuple[int, ...]]:
        """Basis of the right kernel as primitive integer vectors."""
        if not self.ncols:
            return []
        if not self.rows:
            return [tuple(int(i == j) for j in range(self.ncols)) for i in range(self.ncols)]
        basis = self._domain().nullspace()
        return [primitive_integer_vector(row) for row in _from_domain(basis)]

    def independent_rows(self) -> List[int]:
        """Indices of the first-come maximal independent subset of rows."""
        if not self.rows or not self.ncols:
            return []
        _, pivots = self.transpose().rref()
        return list(pivots)

    def det(self) -> Fraction:
        if len(self.rows) != self.ncols:
            raise ValueError("Determinant of a non-square matrix")
        if not self.rows:
            return Fraction(1)
        return from_qq(self._domain().det())

    def inverse(self) -> "QMatrix":
        if self.det() == 0:
            raise ZeroDivisionError("Matrix is singular")
        return QMatrix(_from_domain(self._domain().inv()))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.ncols != len(other.rows):
            raise ValueError("Matrix shapes do not match")
        return QMatrix(_from_domain(self._domain() * other._domain()))

    def column(self, j: int) -> List[Fraction]:
        return [row[j] for row in self.rows]

    def with_columns(self, indices: Sequence[int]) -> "QMatrix":
        return QMatrix([[row[j] for j in indices] for row in self.rows], ncols=len(indices))


def in_row_span(basis: Sequence[Sequence[Scalar]], vector: Sequence[Scalar]) -> bool:
    """True when ``vector`` is a rational combination of the rows of ``basis``."""
    if not basis:
        return not any(vector)
    base_rank = QMatrix(basis).rank()
    return QMatrix(list(basis) + [list(vector)]).rank() == base_rank


def poly_det(rows: Sequence[Sequence[MPoly]]) -> MPoly:
    """Determinant of a square matrix of polynomials from one context.

    Uses fraction-free elimination over the polynomial ring, so no rational
    functions appear on the way.
    """
    if not rows:
        raise ValueError("Determinant of an empty matrix")
    context = rows[0][0].context
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("Determinant of a non-square matrix")
    domain = context.ring.to_domain()
    matrix = DomainMatrix([[entry.poly for entry in row] for row in rows], (n, n), domain)
    return MPoly(context, context.ring(matrix.det()))
