"""
Prolongation of the embedding to six points on a conic.

On the locus Q = 0 the chart is parametrized by three points z1, z2, z3 of
the projective line (the other three sit at 0, 1 and infinity). There the
ten split coordinates vanish and the remaining thirty are c(z) times the
polynomials of PROLONG_TABLE, each of which is a product of three minors of
the 2x6 matrix with columns (1,0), (0,1), (1,1), (1,z1), (1,z2), (1,z3).
"""
import itertools
import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra import Factored, MPoly, QMatrix, RatFunc, RationalMap, VarContext, compose_poly, parse_rational_list
from ..embedding import Proj39, build_embedding_table
from ..errors import DegenerateZ, IdentityFailure
from ..relations import membership
from ..roots import SignedPerm40

logger = logging.getLogger(__name__)

Z = VarContext("z", ("z1", "z2", "z3"))

Z_TO_X = ("(1 - z1)/(1 - z2)", "(1 - z1)/(1 - z3)", "z1/z2", "z1/z3")

C_FACTOR = "(z1 - 1)*(z1 - z3)*(z2 - z3)*(z1 - z2)*z1/((1 - z2)**2*z3**2*(1 - z3)**2*z2**2)"

# y_j(z_to_x(z)) = c(z) * cy_j for j = 11..40; y1..y10 vanish
PROLONG_TABLE = {
    11: "-z1*(z2 - z3)",
    12: "-z2 + z1",
    13: "z1 - z3",
    14: "-(-1 + z1)*(z2 - z3)",
    15: "(-1 + z1)*z3",
    16: "(-1 + z1)*z2",
    17: "z1*(-1 + z3)",
    18: "z1*(-1 + z2)",
    19: "-(-z2 + z1)*z3",
    20: "-(z1 - z3)*z2",
    21: "-(-z2 + z1)*(-1 + z3)",
    22: "-(z1 - z3)*(-1 + z2)",
    23: "-(-1 + z1)*(z2 - z3)",
    24: "z1 - z3",
    25: "-z2 + z1",
    26: "-z1*(z2 - z3)",
    27: "-(z1 - z3)*(-1 + z2)",
    28: "-(-z2 + z1)*(-1 + z3)",
    29: "-(z1 - z3)*z2",
    30: "-(-z2 + z1)*z3",
    31: "(-1 + z3)*z2",
    32: "(-1 + z2)*z3",
    33: "(-1 + z2)*z3",
    34: "(-1 + z3)*z2",
    35: "z1*(-1 + z2)",
    36: "z1*(-1 + z3)",
    37: "(-1 + z1)*z2",
    38: "(-1 + z1)*z3",
    39: "z2 - z3",
    40: "z2 - z3",
}

PRINTED_DUPLICATES = ((39, 40), (12, 25), (13, 24), (32, 33), (31, 34))

SPLIT_ROWS = tuple(range(1, 11))

# Columns of the 2x6 configuration matrix on the line, as text in z
Z_COLUMNS = (("1", "0"), ("0", "1"), ("1", "1"), ("1", "z1"), ("1", "z2"), ("1", "z3"))


class PointZ:
    """Three points z1, z2, z3 of the line completing 0, 1, infinity to six distinct points."""

    __slots__ = ("z",)

    def __init__(self, values: Sequence):
        values = tuple(Fraction(v) for v in values)
        if len(values) != 3:
            raise ValueError(f"A point of X(2,6) has 3 coordinates, got {len(values)}")
        self.z = values
        if self.nondegeneracy() == 0:
            raise DegenerateZ(f"The points 0, 1, infinity, {', '.join(str(v) for v in values)} are not distinct")

    @classmethod
    def parse(cls, text: str) -> "PointZ":
        return cls(parse_rational_list(text, 3))

    def nondegeneracy(self) -> Fraction:
        """prod z_i (z_i - 1) * prod_{i<j} (z_i - z_j)."""
        value = Fraction(1)
        for v in self.z:
            value *= v * (v - 1)
        for a, b in itertools.combinations(self.z, 2):
            value *= a - b
        return value

    def __iter__(self):
        return iter(self.z)

    def __len__(self) -> int:
        return 3

    def __getitem__(self, index):
        return self.z[index]

    def __eq__(self, other) -> bool:
        return isinstance(other, PointZ) and self.z == other.z

    def __hash__(self) -> int:
        return hash(self.z)

    def __repr__(self) -> str:
        return "PointZ(" + ", ".join(str(v) for v in self.z) + ")"


class ProlongTable:
    """The thirty prolonged coordinate polynomials and the common factor c."""

    def __init__(self):
        self.rows: Dict[int, MPoly] = {j: Z.parse(text) for j, text in PROLONG_TABLE.items()}
        self.c = RatFunc.parse(Z, C_FACTOR)

    def __getitem__(self, j: int) -> MPoly:
        return self.rows[j]

    def polys(self) -> List[MPoly]:
        return [self.rows[j] for j in sorted(self.rows)]

    def check_duplicates(self) -> List[Tuple[int, int]]:
        """Pairs of rows printed as equal that are not equal polynomials."""
        return [(a, b) for a, b in PRINTED_DUPLICATES if self.rows[a] != self.rows[b]]

    def values(self, z: Sequence) -> List[Fraction]:
        """The 40 prolonged coordinates at z (split coordinates are zero)."""
        return [Fraction(0)] * len(SPLIT_ROWS) + [self.rows[j].evaluate(list(z)) for j in sorted(self.rows)]


@lru_cache(maxsize=1)
def prolong_table() -> ProlongTable:
    table = ProlongTable()
    broken = table.check_duplicates()
    if broken:
        a, b = broken[0]
        raise IdentityFailure(f"cy{a} and cy{b} are printed equal but differ", index=a)
    return table


@lru_cache(maxsize=1)
def z_to_x_map() -> RationalMap:
    """The substitution of the z-parametrization into (x1, x2, x3, x4)."""
    return RationalMap.parse(Z, Z_TO_X, name="z_to_x")


def z_to_x(z: PointZ) -> List[Fraction]:
    """The chart point of a configuration on a conic.

    Raises:
        DegenerateZ: If the points are not distinct
    """
    if not isinstance(z, PointZ):
        z = PointZ(z)
    return z_to_x_map()(list(z))


def conic_vanishes() -> bool:
    """Q composed with the z-parametrization is identically zero."""
    q = build_embedding_table().factors["Q"]
    return compose_poly(q, z_to_x_map()).is_zero


def prolonged_phi(z: PointZ) -> Proj39:
    """The point y_1 = ... = y_10 = 0, y_j = cy_j(z) of P^39.

    Raises:
        DegenerateZ: If the points are not distinct
    """
    if not isinstance(z, PointZ):
        z = PointZ(z)
    return Proj39(prolong_table().values(z))


def identity_holds_at(z: PointZ) -> bool:
    """y(z_to_x(z)) = c(z) * cy(z) coordinatewise at one point."""
    table = prolong_table()
    composed = build_embedding_table().evaluate(z_to_x(z))
    c = table.c.evaluate(list(z))
    return composed == [c * v for v in table.values(z)]


def verify_prolong_table() -> Dict:
    """Compose y1..y40 with the z-parametrization and compare with c * cy_j.

    Each base factor of the embedding table is composed and factored once,
    so the thirty identities are checked on factored forms.

    Returns:
        Report with the rows checked, the rows that vanish and the text of c

    Raises:
        IdentityFailure: On the first row that does not hold, with its index
    """
    embedding = build_embedding_table()
    table = prolong_table()
    rmap = z_to_x_map()
    composed: Dict[str, Optional[Factored]] = {}
    for name, poly in embedding.factors.items():
        image = compose_poly(poly, rmap)
        composed[name] = None if image.is_zero else Factored.from_ratfunc(image)
    c = Factored.from_ratfunc(table.c)
    vanishing = []
    for j, (sign, names) in enumerate(embedding.rows, start=1):
        zero = any(composed[name] is None for name in names)
        if j in SPLIT_ROWS:
            if not zero:
                raise IdentityFailure(f"y{j} does not vanish on the conic", index=j)
            vanishing.append(j)
            continue
        if zero:
            raise IdentityFailure(f"y{j} vanishes on the conic but cy{j} = {PROLONG_TABLE[j]}", index=j)
        value = Factored.product(Z, (composed[name] for name in names)) * sign
        if value != c * Factored.from_poly(table[j]):
            raise IdentityFailure(f"y{j} o z_to_x is not c * ({PROLONG_TABLE[j]})", index=j)
        logger.debug("y%d o z_to_x = c * (%s)", j, PROLONG_TABLE[j])
    logger.info("Prolonged table verified: %d rows", len(embedding.rows))
    return {"rows_checked": len(embedding.rows), "vanishing": vanishing, "c": c.to_text()}


def perfect_matchings(indices: Sequence[int] = (1, 2, 3, 4, 5, 6)) -> List[Tuple[Tuple[int, int], ...]]:
    """The 15 ways to split six columns into three pairs."""
    indices = list(indices)
    if not indices:
        return [()]
    first, rest = indices[0], indices[1:]
    result = []
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in perfect_matchings(remaining):
            result.append(((first, partner),) + tail)
    return result


def _minor(columns: Sequence[Tuple], i: int, j: int):
    (a, b), (c, d) = columns[i - 1], columns[j - 1]
    return a * d - b * c


def fifteen_products(z: Optional[Sequence] = None) -> Dict[Tuple[Tuple[int, int], ...], object]:
    """D_ij D_kl D_mn over the 15 perfect matchings of the six columns.

    Args:
        z: A point to evaluate at; the products are z-polynomials when omitted

    Returns:
        Map matching -> product
    """
    if z is None:
        columns = [tuple(Z.parse(e) for e in column) for column in Z_COLUMNS]
    else:
        values = dict(zip(("z1", "z2", "z3"), (Fraction(v) for v in z)))
        columns = [tuple(Fraction(1 if e == "1" else 0) if e in ("0", "1") else values[e] for e in column)
                   for column in Z_COLUMNS]
    products = {}
    for matching in perfect_matchings():
        value = 1
        for i, j in matching:
            value = value * _minor(columns, i, j)
        products[matching] = value
    return products


def match_products() -> Dict[int, Tuple[Tuple[Tuple[int, int], ...], int]]:
    """Match every cy_j with a product of three minors up to sign.

    Returns:
        Map j -> (matching, sign) with cy_j = sign * D_ij D_kl D_mn

    Raises:
        IdentityFailure: If some row is no such product, or a product is not
            used exactly twice
    """
    products = fifteen_products()
    table = prolong_table()
    matches = {}
    for j, poly in table.rows.items():
        found = None
        for matching, product in products.items():
            if poly == product:
                found = (matching, 1)
            elif poly == -product:
                found = (matching, -1)
            if found:
                break
        if found is None:
            raise IdentityFailure(f"cy{j} = {PROLONG_TABLE[j]} is not a product of three minors", index=j)
        matches[j] = found
    counts = Counter(matching for matching, _ in matches.values())
    uneven = [m for m in products if counts[m] != 2]
    if uneven:
        raise IdentityFailure(f"Minor product {uneven[0]} does not occur exactly twice")
    return matches


def span_check() -> int:
    """Dimension of the linear span of cy_11..cy_40 as z-polynomials."""
    polys = prolong_table().polys()
    monomials = sorted({m for p in polys for m in p.terms()})
    rows = [[p.terms().get(m, 0) for m in monomials] for p in polys]
    dimension = QMatrix(rows, ncols=len(monomials)).rank()
    logger.info("Prolonged coordinates span a space of dimension %d", dimension)
    return dimension


def random_z_points(rng: np.random.RandomState, count: int, bound: int = 9) -> List[PointZ]:
    """Random nondegenerate configurations with small rational z."""
    points = []
    while len(points) < count:
        nums = rng.randint(-bound, bound + 1, size=3)
        dens = rng.randint(1, 5, size=3)
        try:
            points.append(PointZ([Fraction(int(n), int(d)) for n, d in zip(nums, dens)]))
        except DegenerateZ:
            continue
    return points


def orbit_membership(z: PointZ, elements: Sequence[SignedPerm40]) -> Dict:
    """Move the prolonged point by group elements and test each image for membership."""
    point = prolonged_phi(z)
    failures = 0
    for g in elements:
        image = Proj39(g.apply_to_point(point.coords))
        if not membership(image).member:
            logger.warning("Image of the prolonged point of %s leaves the variety", z)
            failures += 1
    return {"images": len(elements), "failed": failures}


def prolongation_check(samples: int = 25, seed: int = 0) -> Dict:
    """Random configurations: the identity with c, membership and distinct images."""
    rng = np.random.RandomState(seed)
    points = random_z_points(rng, samples)
    images = {}
    identity_failures, outside = 0, 0
    for z in points:
        if not identity_holds_at(z):
            identity_failures += 1
        image = prolonged_phi(z)
        if not membership(image).member:
            outside += 1
        images.setdefault(image, set()).add(z)
    collisions = sum(1 for zs in images.values() if len(zs) > 1)
    return {
        "samples": len(points),
        "identity_failures": identity_failures,
        "outside_variety": outside,
        "collisions": collisions,
    }
