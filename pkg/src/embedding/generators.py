"""
The birational generators s1..s6 and the association sr of the chart,
their cofactors and their printed transformation tables.

For each generator g the embedding satisfies ``y(g x) = c_g(x) * T_g y(x)``
where T_g is a signed permutation of the 40 coordinates; ``TABLES`` lists
T_g as signed 1-based targets (entry ``-6`` in position 1 means
``y1(g x) = -c_g y6(x)``).
"""
import logging
from functools import lru_cache
from typing import Dict, Sequence, Tuple

from ..algebra import Factored, RatFunc, RationalMap
from ..errors import UnknownGenerator
from ..roots import SignedPerm40, resolve_generator
from .table import X, build_embedding_table

logger = logging.getLogger(__name__)

_D1 = "(x1*x4 - x2*x3)"
_D2 = "(x1*x4 - x4 + x2 - x2*x3 + x3 - x1)"

MAP_FORMULAS: Dict[str, Tuple[str, ...]] = {
    "s1": ("1/x1", "1/x2", "x3/x1", "x4/x2"),
    "s2": ("x3", "x4", "x1", "x2"),
    "s3": ("(x1 - x3)/(1 - x3)", "(x2 - x4)/(1 - x4)", "x3/(x3 - 1)", "x4/(x4 - 1)"),
    "s4": ("1/x1", "x2/x1", "1/x3", "x4/x3"),
    "s5": ("x2", "x1", "x4", "x3"),
    "s6": ("1/x1", "1/x2", "1/x3", "1/x4"),
}

# The last component of sr is printed as (x1-1)D1 over "(x3-x1)/(x2-x1)";
# both ways of reading the denominator are kept and tested.
ASSOCIATION_HEAD = (
    f"(x4 - 1)*{_D1}/((x4 - x2)*(x4 - x3))",
    f"(x3 - 1)*{_D1}/((x3 - x1)*(x4 - x3))",
    f"(x2 - 1)*{_D1}/((x4 - x2)*(x2 - x1))",
)
ASSOCIATION_READINGS = {
    "product": f"(x1 - 1)*{_D1}/((x3 - x1)*(x2 - x1))",
    "quotient": f"(x1 - 1)*{_D1}*(x2 - x1)/(x3 - x1)",
}
ADOPTED_READING = "product"

COFACTORS: Dict[str, str] = {
    "s1": "1/(x1*x2)**3",
    "s2": "1",
    "s3": "1/((1 - x3)**3*(1 - x4)**3)",
    "s4": "1/(x1*x3)**3",
    "s5": "1",
    "s6": "1/(x1*x2*x3*x4)**2",
    "sr": f"({_D1}*{_D2}/((-x4 + x2)*(x4 - x3)*(x1 - x3)*(x1 - x2)))**3",
}

TABLES: Dict[str, Tuple[int, ...]] = {
    "s1": (
        -6, 2, 3, -8, -7, -1, -5, -4, 9, 10,
        11, -28, -27, -40, -32, -31, -35, -36, 19, 20,
        -25, -24, -39, -22, -21, 26, -13, -12, 29, 30,
        -16, -15, -38, -37, -17, -18, -34, -33, -23, -14,
    ),
    "s2": (
        1, 2, -6, 4, 5, -3, -9, -10, -7, -8,
        -14, 12, 13, -11, -17, -18, -15, -16, -21, -22,
        -19, -20, -26, 24, 25, -23, -29, -30, -27, -28,
        -33, -34, -31, -32, -37, -38, -35, -36, 39, 40,
    ),
    "s3": (
        1, -3, -2, -7, -8, 6, -4, -5, 9, 10,
        11, -16, -15, -39, -13, -12, 17, 18, -29, -30,
        -34, -33, -40, -38, -37, 26, -32, -31, -19, -20,
        -28, -27, -22, -21, 35, 36, -25, -24, -14, -23,
    ),
    "s4": (
        -5, 2, -9, 4, -1, -7, -6, 8, -3, 10,
        -29, 12, -40, -27, -33, -35, -31, -37, 19, -26,
        21, -23, -22, -39, 25, -20, -14, 28, -11, 30,
        -17, -38, -15, -36, -16, -34, -18, -32, -24, -13,
    ),
    "s5": (
        1, 2, 3, -5, -4, 6, -8, -7, -10, -9,
        11, -13, -12, 14, -16, -15, -18, -17, -20, -19,
        -22, -21, 23, -25, -24, 26, -28, -27, -30, -29,
        -32, -31, -34, -33, -36, -35, -38, -37, 39, 40,
    ),
    "s6": (
        -39, 2, -26, -25, -24, -23, -22, -21, -20, -19,
        11, 12, 13, 14, -18, -17, -16, -15, -10, -9,
        -8, -7, -6, -5, -4, -3, 27, 28, 29, 30,
        -35, -36, -37, -38, -31, -32, -33, -34, -1, 40,
    ),
    "sr": (
        1, 2, 3, 4, 5, 6, 7, 8, 9, 10,
        -26, -25, -24, -23, -38, -37, -36, -35, -30, -29,
        -28, -27, -14, -13, -12, -11, -22, -21, -20, -19,
        -34, -33, -32, -31, -18, -17, -16, -15, -40, -39,
    ),
}

MAP_NAMES = ("s1", "s2", "s3", "s4", "s5", "s6", "sr")

# Reflection realized by each map
ROOT_GENERATORS = {
    "s1": "s12",
    "s2": "s23",
    "s3": "s34",
    "s4": "s45",
    "s5": "s56",
    "s6": "s123",
    "sr": "sr",
}

# Edges of the Coxeter graph of s1..s6
COXETER_EDGES = frozenset({("s1", "s2"), ("s2", "s3"), ("s3", "s4"), ("s4", "s5"), ("s3", "s6")})


class GeneratorMap:
    """A birational involution of the chart with its cofactor and printed table."""

    def __init__(self, name: str, rmap: RationalMap, cofactor: Factored, table: SignedPerm40):
        self.name = name
        self.rmap = rmap
        self.cofactor = cofactor
        self.table = table

    @property
    def reflection(self) -> str:
        return ROOT_GENERATORS[self.name]

    def __call__(self, point: Sequence):
        return self.rmap(point)

    def __repr__(self) -> str:
        return f"GeneratorMap({self.name})"

    def is_involution(self) -> bool:
        return self.rmap.compose(self.rmap).is_identity()

    def formulas(self) -> Tuple[str, ...]:
        return tuple(c.to_text() for c in self.rmap.components)


def map_name(name: str) -> str:
    """Normalize a generator name to s1..s6 or sr.

    Raises:
        UnknownGenerator: If the name is not a known generator
    """
    key = resolve_generator(name)
    for short, reflection in ROOT_GENERATORS.items():
        if reflection == key:
            return short
    raise UnknownGenerator(f"Unknown generator '{name}'")


def association_map(reading: str = ADOPTED_READING) -> RationalMap:
    """The association sr with the last component read one of two ways."""
    if reading not in ASSOCIATION_READINGS:
        raise ValueError(f"Unknown reading '{reading}' of the association")
    texts = ASSOCIATION_HEAD + (ASSOCIATION_READINGS[reading],)
    return RationalMap.parse(X, texts, name="sr")


@lru_cache(maxsize=None)
def generator_map(name: str) -> GeneratorMap:
    """The printed map, cofactor and table of a generator.

    Args:
        name: s1..s6 or sr (the reflection names s12..s56, s123 are accepted too)

    Raises:
        UnknownGenerator: If the name is not a generator
    """
    short = map_name(name)
    if short == "sr":
        rmap = association_map()
    else:
        rmap = RationalMap.parse(X, MAP_FORMULAS[short], name=short)
    cofactor = Factored.from_ratfunc(RatFunc.parse(X, COFACTORS[short]))
    table = SignedPerm40.from_signed_targets(TABLES[short])
    return GeneratorMap(short, rmap, cofactor, table)


def coxeter_order(a: str, b: str) -> int:
    """Order of s_a s_b prescribed by the Coxeter graph of s1..s6."""
    if a == b:
        return 1
    return 3 if (a, b) in COXETER_EDGES or (b, a) in COXETER_EDGES else 2


def coxeter_relation_holds(a: str, b: str) -> bool:
    """(s_a s_b)^m = id as rational maps."""
    m = coxeter_order(a, b)
    pair = generator_map(a).rmap.compose(generator_map(b).rmap)
    power = pair
    for _ in range(m - 1):
        power = power.compose(pair)
    return power.is_identity()


def table_holds_at(rmap: RationalMap, cofactor: Factored, table: SignedPerm40,
                   points: Sequence[Sequence]) -> bool:
    """Numeric check of y(g x) = c(x) T y(x) at the given points."""
    embedding = build_embedding_table()
    for point in points:
        image = rmap(point)
        lhs = embedding.evaluate(image)
        c = cofactor.evaluate(point)
        rhs = [c * v for v in table.apply_to_point(embedding.evaluate(point))]
        if lhs != rhs:
            return False
    return True


def resolve_association_reading(points: Sequence[Sequence]) -> Dict[str, Dict[str, bool]]:
    """Test both readings of the printed association against the involution
    property and the printed table.

    Returns:
        Map reading -> {"involution": bool, "table": bool}
    """
    cofactor = Factored.from_ratfunc(RatFunc.parse(X, COFACTORS["sr"]))
    table = SignedPerm40.from_signed_targets(TABLES["sr"])
    results = {}
    for reading in ASSOCIATION_READINGS:
        rmap = association_map(reading)
        try:
            agrees = table_holds_at(rmap, cofactor, table, points)
        except ArithmeticError:
            agrees = False
        try:
            involution = rmap.compose(rmap).is_identity()
        except ArithmeticError:
            involution = False
        results[reading] = {"involution": involution, "table": agrees}
        logger.info("Association reading %s: %s", reading, results[reading])
    return results
