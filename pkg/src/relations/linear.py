"""
The linear relations of the image: the group orbit of y3 - y4 + y5 - y6,
its rank and the expressions of thirty coordinates in ten pivots.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from ..algebra import MPoly, QMatrix, VarContext
from ..errors import RankMismatch
from ..roots import orbit, simple_generators

logger = logging.getLogger(__name__)

Y = VarContext("y", tuple(f"y{i}" for i in range(1, 41)))

# g1..g9, g0 in ring order
G = VarContext("g", ("g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g9", "g0"))

# y-index of each g variable, in the order of G
PIVOTS = (1, 3, 4, 5, 7, 11, 12, 13, 15, 19)

LINEAR_SEED = {3: 1, 4: -1, 5: 1, 6: -1}

EXPECTED_RANK = 30

PRINTED_PIVOT_EXPRESSIONS = {
    2: "y1 - y5 + y4",
    6: "-y4 + y5 + y3",
    8: "-y3 - y1 + y7",
    9: "-y1 + y7 - y4",
    10: "y7 - y5 - y3",
    14: "y11 + y13 - y12",
    16: "-y1 + y12 - y13 - y11 + y15",
    17: "y15 - y1 - y13",
    18: "-y13 - y11 + y15",
    20: "y19 + y3 + y11",
    21: "y4 + y19 + y12",
    22: "y19 + y3 + y11 + y13 + y5",
    23: "y1 - y12 + y13 + y3 + y11",
    24: "y4 + y1 + y13",
    25: "y12 + y5 - y1",
    26: "-y4 + y5 - y1 + y3 + y11",
    27: "y19 + y4 + y1 + y3 - y7 + y11 + y13",
    28: "-y7 + y19 + y12 + y5 + y3",
    29: "y3 - y7 + y11 + y19 + y5",
    30: "y3 + y1 - y7 + y19 + y4",
    31: "-y1 - y13 + y19 + y15 + y12",
    32: "y19 + y3 + y15",
    33: "y19 + y4 + y15",
    34: "y19 - y13 + y15 + y12 + y5 - y1 + y3",
    35: "-y5 - y1 - y3 + y7 - y11 + y15 - y13",
    36: "-y1 + y7 - y4 - y13 + y15",
    37: "-y3 + y7 - y11 + y15 - y1 + y12 - y13",
    38: "-y1 + y7 + y15",
    39: "y1 - y12 + y13",
    40: "-y5 + y4 + y1 + y13 - y12",
}

Expression = Dict[int, Fraction]


def seed_form() -> Tuple[int, ...]:
    return tuple(LINEAR_SEED.get(a, 0) for a in range(1, 41))


def parse_linear(text: str) -> Expression:
    """Coefficients of a linear form in y1..y40 written as text (1-based keys)."""
    poly = Y.parse(text)
    coefficients = {}
    for monom, coeff in poly.terms().items():
        if sum(monom) != 1:
            raise ValueError(f"'{text}' is not a linear form")
        coefficients[monom.index(1) + 1] = coeff
    return coefficients


@lru_cache(maxsize=1)
def linear_orbit() -> List[Tuple[int, ...]]:
    """Orbit of the seed form under the group, one primitive representative per line."""
    forms = orbit(seed_form(), simple_generators())
    logger.info("Linear orbit has %d forms", len(forms))
    return forms


class PivotBasis:
    """The non-pivot coordinates written in terms of the ten pivots."""

    def __init__(self, expressions: Dict[int, Expression]):
        self.pivots = PIVOTS
        self.expressions = expressions

    @classmethod
    def from_forms(cls, forms: Sequence[Sequence[int]]) -> "PivotBasis":
        """Solve the relations for the thirty non-pivot coordinates.

        Raises:
            RankMismatch: If the non-pivot coordinates are not determined by the pivots
        """
        others = [a for a in range(1, 41) if a not in PIVOTS]
        order = others + list(PIVOTS)
        reduced, pivot_columns = QMatrix(forms).with_columns([a - 1 for a in order]).rref()
        if tuple(pivot_columns) != tuple(range(len(others))):
            raise RankMismatch("The chosen pivots do not parametrize the solution space")
        expressions = {}
        for row, a in enumerate(others):
            values = reduced.rows[row]
            expressions[a] = {
                p: -values[len(others) + k] for k, p in enumerate(PIVOTS) if values[len(others) + k]
            }
        return cls(expressions)

    def expand(self, pivot_values: Sequence) -> List:
        """All 40 coordinates from the values of y at the pivots (in G order)."""
        by_index = dict(zip(PIVOTS, pivot_values))
        values = []
        for a in range(1, 41):
            if a in by_index:
                values.append(by_index[a])
            else:
                total = Fraction(0)
                for p, c in self.expressions[a].items():
                    total = total + c * by_index[p]
                values.append(total)
        return values

    def pivot_values(self, values: Sequence) -> List:
        """The g coordinates (g1..g9, g0) of a 40-vector."""
        return [values[p - 1] for p in PIVOTS]

    def substitution(self) -> List[MPoly]:
        """y1..y40 as linear polynomials in g1..g9, g0."""
        gens = dict(zip(PIVOTS, G.gens()))
        images = []
        for a in range(1, 41):
            if a in gens:
                images.append(gens[a])
            else:
                poly = G.zero()
                for p, c in self.expressions[a].items():
                    poly = poly + gens[p].scale(c)
                images.append(poly)
        return images

    def kills(self, form: Sequence) -> bool:
        """True when the form vanishes after substituting the expressions."""
        total: Dict[int, Fraction] = {}
        for a, c in enumerate(form, start=1):
            if not c:
                continue
            if a in PIVOTS:
                total[a] = total.get(a, 0) + c
            else:
                for p, e in self.expressions[a].items():
                    total[p] = total.get(p, 0) + c * e
        return not any(total.values())

    def printed_mismatches(self) -> List[int]:
        """Coordinates whose solved expression differs from the printed one."""
        return [a for a, text in PRINTED_PIVOT_EXPRESSIONS.items()
                if parse_linear(text) != self.expressions.get(a)]

    def to_json(self) -> Dict[str, str]:
        gens = dict(zip(PIVOTS, G.gens()))
        result = {}
        for a in sorted(self.expressions):
            poly = G.zero()
            for p, c in self.expressions[a].items():
                poly = poly + gens[p].scale(c)
            result[f"y{a}"] = poly.to_text()
        return result


def printed_pivot_basis() -> PivotBasis:
    return PivotBasis({a: parse_linear(text) for a, text in PRINTED_PIVOT_EXPRESSIONS.items()})


@lru_cache(maxsize=1)
def linear_relation_basis() -> Tuple[List[Tuple[int, ...]], int, PivotBasis]:
    """Orbit of the seed, its rank and the solved pivot expressions.

    Raises:
        RankMismatch: If the rank is not 30 or the pivots do not parametrize
    """
    forms = linear_orbit()
    rank = QMatrix(forms).rank()
    logger.info("Linear relations have rank %d", rank)
    if rank != EXPECTED_RANK:
        raise RankMismatch(f"Linear relations have rank {rank}, expected {EXPECTED_RANK}")
    basis = PivotBasis.from_forms(forms)
    return forms, rank, basis
