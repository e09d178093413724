"""
The two-term cubic relations, their reduction to the ten pivot coordinates
and the printed cubics cub_1..cub_11, cub_19.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra import Factored, MPoly, QMatrix, in_row_span
from ..embedding import build_embedding_table
from ..errors import CountMismatch
from ..roots import SignedPerm40, orbit, simple_generators
from .linear import G, PIVOTS, PivotBasis, Y, linear_relation_basis

logger = logging.getLogger(__name__)

EXPECTED_CUBIC_COUNT = 30

PRINTED_CUBICS = {
    1: "g2*g8*g0 + g2*g8*g7 - g3*g6*g0 - g2*g3*g6 - g3*g6**2 - g8*g0*g3 - g3*g6*g8"
       " + g3*g7*g0 + g2*g3*g7 + g6*g7*g3",
    2: "g0**2*g1 + g3*g1*g0 + g1**2*g0 + g2*g0*g1 - g5*g1*g0 + g0*g1*g6 + g8*g1*g0 + g2*g3*g6"
       " + g2*g6*g1 + g2*g8*g6 + g3*g1*g6 + g1**2*g6 + g8*g1*g6 - g5*g3*g6 - g5*g1*g6 - g5*g8*g6",
    3: "-g8*g0*g3 + g8*g0*g4 + g2*g8*g0 - g3*g6*g0 - g2*g3*g6 - g3*g6**2 - g3*g6*g8 - g3*g6*g4",
    4: "g2*g0*g7 + g2**2*g7 + g2*g6*g7 + g2*g8*g7 + g2*g7*g4 - g0*g4*g6 - g8*g0*g4 + g0*g4*g7",
    5: "-g5*g3*g2 - g2*g5*g1 - g5*g8*g2 + g2*g3*g0 + g2*g0*g1 + g2*g8*g0 + g2*g3*g7"
       " + g2*g1*g7 + g2*g8*g7 + g2*g3*g4 + g2*g1*g4 + g2*g8*g4 + g2**2*g3 + g2**2*g1 + g2**2*g8"
       " + g5*g4*g0 - g5*g3*g0 - g5*g1*g0 - g5*g8*g0 + g5*g7*g0",
    6: "g5*g8*g1 - g8*g1*g4 - g2*g8*g1 - g5*g8*g7 + g4*g7*g8 + g2*g8*g7"
       " + g5*g8**2 - g8**2*g4 - g2*g8**2 + g5*g8*g2 - g2*g8*g4 - g2**2*g8 + g5*g8*g6 - g8*g4*g6"
       " - g2*g8*g6 - g5*g7*g6 - g5*g4*g6 + g5*g1*g6",
    7: "-g9*g2*g3 + g3*g9*g5 - g3*g9*g6 - g9*g3*g0 - g9*g3*g4 + 2*g9*g2*g4 - g4*g9*g5"
       " + g4*g9*g6 + g9*g0*g4 + g9*g4**2 + g9*g2**2 - g9*g5*g2 + g9*g2*g6 + g9*g0*g2"
       " - g5*g6*g0 - g5*g3*g6 - g5*g6*g9",
    8: "-g5*g3*g7 + g5*g4*g7 + g2*g5*g7 + g5*g7*g6 - g2*g3*g1 - g2*g0*g1 - g2*g1*g7 + g5*g3*g1"
       " + g5*g1*g0 - g3*g1*g6 - g0*g1*g6 - g1*g7*g6 - g3*g1*g0 - g0**2*g1 - g1*g7*g0"
       " - g1*g4*g3 - g1*g4*g0 - g1*g4*g7",
    9: "-g8*g1*g3 - g3*g1*g6 + g3*g8*g7 + g6*g7*g3 - g9*g3*g7 - g3*g8**2 - 2*g3*g6*g8"
       " + g9*g3*g8 - g3*g2*g8 - g2*g3*g6 + g9*g2*g3 - g3*g6**2 + g3*g9*g6 - g3*g1*g0 - g2*g3*g1"
       " - g0**2*g1 - g2*g0*g1 - g9*g0*g1 - g1*g7*g0 - g2*g1*g7 - g9*g1*g7",
    10: "g5*g8*g0 - g8*g0*g4 - g2*g8*g0 + g5*g8*g9 - g9*g8*g4 - g2*g9*g8 + g3*g6*g8"
        " + g8*g0*g3 + g2*g3*g6 - g5*g3*g6 + g3*g6**2 + g3*g6*g0 + g3*g6*g4 - g9*g2*g3 + g3*g9*g5"
        " - g3*g9*g6 - g9*g3*g0 - g9*g3*g4",
    11: "g2*g5*g1 + g5*g1**2 - g5**2*g1 + g5*g1*g0 + g5*g3*g1 - g2*g5*g7 - g5*g1*g7 + g5**2*g7"
        " - g5*g7*g0 - g5*g3*g7 + g5*g8*g2 + g5*g8*g1 - g5**2*g8 + g5*g8*g0 + g5*g3*g8"
        " - g3*g2*g8 - g2*g8*g0 - g2*g8*g7",
    19: "-g5*g1*g0 - g2*g5*g1 + g0**2*g1 + 2*g2*g0*g1 + g0*g1*g6 + g1*g7*g0 + g2*g1*g7 + g1*g7*g6"
        " + g1*g4*g0 + g2*g1*g4 + g1*g4*g6 + g2**2*g1 + g2*g6*g1 - g5*g7*g6 - g5*g4*g6",
}


def printed_cubic(j: int) -> MPoly:
    """cub_j in the g-context (j in 1..11 or 19)."""
    if j not in PRINTED_CUBICS:
        raise KeyError(f"cub_{j} is not printed")
    return G.parse(PRINTED_CUBICS[j])


class TwoTermCubic:
    """The relation y_a y_b y_c - epsilon * y_d y_e y_f = 0.

    Index triples are 0-based and sorted, with the smaller triple first, so
    proportional relations have one representation.
    """

    __slots__ = ("first", "second", "epsilon")

    def __init__(self, first: Sequence[int], second: Sequence[int], epsilon: int = 1):
        first, second = tuple(sorted(first)), tuple(sorted(second))
        if len(first) != 3 or len(second) != 3:
            raise ValueError("Both monomials of a two-term cubic have degree 3")
        if epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        if first > second:
            first, second = second, first
        self.first = first
        self.second = second
        self.epsilon = epsilon

    @classmethod
    def seed(cls) -> "TwoTermCubic":
        """y3 y13 y21 - y4 y14 y20."""
        return cls((2, 12, 20), (3, 13, 19), 1)

    def act(self, g: SignedPerm40) -> "TwoTermCubic":
        """The relation F(T P) for F = self."""
        s1, first = g.apply_to_monomial(self.first)
        s2, second = g.apply_to_monomial(self.second)
        return TwoTermCubic(first, second, self.epsilon * s1 * s2)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TwoTermCubic) and self.first == other.first
                and self.second == other.second and self.epsilon == other.epsilon)

    def __hash__(self) -> int:
        return hash((self.first, self.second, self.epsilon))

    def __repr__(self) -> str:
        return f"TwoTermCubic({self.to_text()})"

    def to_text(self) -> str:
        sign = "-" if self.epsilon == 1 else "+"
        first = "*".join(f"y{i + 1}" for i in self.first)
        second = "*".join(f"y{i + 1}" for i in self.second)
        return f"{first} {sign} {second}"

    def to_json(self) -> Dict:
        return {
            "plus": [i + 1 for i in self.first],
            "minus": [i + 1 for i in self.second],
            "epsilon": self.epsilon,
        }

    def evaluate(self, values: Sequence):
        a, b, c = (values[i] for i in self.first)
        d, e, f = (values[i] for i in self.second)
        return a * b * c - self.epsilon * (d * e * f)

    def to_poly(self) -> MPoly:
        """The relation as a polynomial in y1..y40."""
        y = Y.gens()
        return y[self.first[0]] * y[self.first[1]] * y[self.first[2]] - (
            y[self.second[0]] * y[self.second[1]] * y[self.second[2]]).scale(self.epsilon)

    def reduce(self, images: Sequence[MPoly]) -> MPoly:
        """Substitute y_a -> images[a] (linear polynomials in the pivots)."""
        return (images[self.first[0]] * images[self.first[1]] * images[self.first[2]]
                - (images[self.second[0]] * images[self.second[1]] * images[self.second[2]]).scale(self.epsilon))

    def vanishes_on_embedding(self) -> bool:
        """Compare the two monomials of the embedding polynomials in factored form."""
        table = build_embedding_table()
        first = Factored.product(table.context, (table.factored[i] for i in self.first))
        second = Factored.product(table.context, (table.factored[i] for i in self.second))
        return first == second * self.epsilon


@lru_cache(maxsize=1)
def cubic_relation_set() -> List[TwoTermCubic]:
    """Orbit of y3 y13 y21 - y4 y14 y20 under the group, in discovery order."""
    members = orbit(TwoTermCubic.seed(), simple_generators(),
                    act=lambda g, c: c.act(g), canonical=lambda c: c)
    logger.info("Cubic orbit has %d relations", len(members))
    return members


class ReducedCubicSpan:
    """Span of the orbit cubics after eliminating the thirty non-pivot coordinates."""

    def __init__(self, polys: Sequence[MPoly], sources: Sequence[TwoTermCubic]):
        self.monomials: List[Tuple[int, ...]] = sorted(
            {m for p in polys for m in p.terms()}, reverse=True)
        self._position = {m: k for k, m in enumerate(self.monomials)}
        vectors = [self.vector(p) for p in polys]
        independent = QMatrix(vectors).independent_rows()
        self.basis: List[MPoly] = [polys[k] for k in independent]
        self.sources: List[TwoTermCubic] = [sources[k] for k in independent]
        self.vectors = [vectors[k] for k in independent]

    def __len__(self) -> int:
        return len(self.basis)

    def vector(self, poly: MPoly) -> Optional[List]:
        """Coefficients on the monomials of the span; None if another monomial occurs."""
        vector = [0] * len(self.monomials)
        for monom, coeff in poly.terms().items():
            k = self._position.get(monom)
            if k is None:
                return None
            vector[k] = coeff
        return vector

    def contains(self, poly: MPoly) -> bool:
        vector = self.vector(poly)
        return vector is not None and in_row_span(self.vectors, vector)

    def contains_all(self, polys: Sequence[MPoly]) -> bool:
        vectors = [self.vector(p) for p in polys]
        if any(v is None for v in vectors):
            return False
        return QMatrix(self.vectors + vectors).rank() == len(self.basis)


def _reduce_orbit(basis: PivotBasis, relations: Sequence[TwoTermCubic]) -> Tuple[List[MPoly], List[TwoTermCubic]]:
    images = basis.substitution()
    polys, sources, seen = [], [], set()
    for relation in relations:
        poly = relation.reduce(images)
        if poly.is_zero:
            continue
        _, key = poly.primitive()
        if key in seen:
            continue
        seen.add(key)
        polys.append(poly)
        sources.append(relation)
    return polys, sources


@lru_cache(maxsize=1)
def reduced_cubics() -> ReducedCubicSpan:
    """A maximal independent set of the reduced orbit cubics.

    Raises:
        CountMismatch: If the number of independent cubics is not 30
    """
    _, _, basis = linear_relation_basis()
    polys, sources = _reduce_orbit(basis, cubic_relation_set())
    span = ReducedCubicSpan(polys, sources)
    logger.info("Reduced cubics: %d distinct, %d independent", len(polys), len(span))
    if len(span) != EXPECTED_CUBIC_COUNT:
        raise CountMismatch(f"Found {len(span)} independent cubics, expected {EXPECTED_CUBIC_COUNT}")
    return span


def pivot_substitution() -> List[MPoly]:
    """g1..g9, g0 as polynomials in x (the embedding polynomials at the pivots)."""
    table = build_embedding_table()
    return [table.y(p) for p in PIVOTS]


def vanishes_under_embedding(poly: MPoly) -> bool:
    """True when the g-polynomial is zero after g_i -> y_{pivot_i}(x)."""
    return poly.substitute(pivot_substitution()).is_zero


def check_printed_cubics(span: ReducedCubicSpan = None) -> Dict[int, Dict[str, bool]]:
    """Span membership and vanishing on the embedding for each printed cub_j."""
    span = span or reduced_cubics()
    results = {}
    for j in sorted(PRINTED_CUBICS):
        poly = printed_cubic(j)
        results[j] = {"in_span": span.contains(poly), "vanishes": vanishes_under_embedding(poly)}
        logger.debug("cub_%d: %s", j, results[j])
    return results


def induced_pivot_action(g: SignedPerm40, basis: PivotBasis) -> List[MPoly]:
    """The linear substitution of g1..g0 induced by a signed permutation."""
    images = basis.substitution()
    return [images[g.target[p - 1]].scale(g.signs[p - 1]) for p in PIVOTS]


def span_is_stable(span: ReducedCubicSpan = None, generators: Sequence[SignedPerm40] = None) -> Dict[int, bool]:
    """Whether each generator maps the reduced cubic span into itself."""
    span = span or reduced_cubics()
    generators = generators if generators is not None else simple_generators()
    _, _, basis = linear_relation_basis()
    results = {}
    for k, g in enumerate(generators):
        action = induced_pivot_action(g, basis)
        moved = [poly.substitute(action) for poly in span.basis]
        results[k] = span.contains_all(moved)
    return results


def sample_vanishing(count: int, seed: int = 0) -> Dict[str, int]:
    """Check a random sample of orbit cubics against the embedding in factored form."""
    relations = cubic_relation_set()
    rng = np.random.RandomState(seed)
    picks = rng.choice(len(relations), size=min(count, len(relations)), replace=False)
    failures = [relations[int(k)].to_text() for k in picks if not relations[int(k)].vanishes_on_embedding()]
    for text in failures:
        logger.warning("Orbit cubic does not vanish: %s", text)
    return {"checked": len(picks), "failed": len(failures)}
