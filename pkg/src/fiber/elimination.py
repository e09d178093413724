"""
Elimination over the base field K = Q(g1, ..., g5).

g6, g8 and g9 are solved from cub_3, cub_7 and cub_19 in closed form; the
remaining cubics become, modulo the quadratic qq in t = g0, linear
equations a_j(s) t + b_j(s) = 0 in s = g7, whose pairwise determinants
share the quadratic factor dd.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..algebra import MPoly, QMatrix, RatFunc, RationalMap, VarContext, parse_rational_list
from ..errors import (
    ArityMismatch,
    DegenerateQuadratic,
    DivisibilityFailure,
    DivisionByZeroPolynomial,
    NonGeneric,
    ZeroDenominator,
)
from ..relations import G, PRINTED_CUBICS, printed_cubic, reduced_cubics

logger = logging.getLogger(__name__)

ST = VarContext("st", ("s", "t"))
KST = VarContext("kst", ("g1", "g2", "g3", "g4", "g5", "s", "t"))

G6_FORMULA = ("-g1*(-g5*g0 - g5*g2 + g0**2 + 2*g0*g2 + g0*g4 + g7*g0 + g2*g7 + g2**2 + g2*g4)"
              "/(g0*g1 + g1*g4 + g1*g7 + g2*g1 - g5*g7 - g5*g4)")
G8_FORMULA = "g3*g6*(g2 + g6 + g0 + g4)/(g0*g2 - g0*g3 + g0*g4 - g3*g6)"
G9_FORMULA = ("g5*g6*(g0 + g3)/(-g2*g3 + g5*g3 - g3*g6 - g0*g3 - g4*g3 + 2*g2*g4 - g5*g4 + g4*g6"
              " + g0*g4 + g4**2 + g2**2 - g5*g2 + g2*g6 + g0*g2 - g5*g6)")

CUB8_DENOMINATOR = "g0*g1 + g1*g4 + g1*g7 + g2*g1 - g5*g7 - g5*g4"

QQ_FORMULA = (
    "g1*g4*t**2 + (-g2*g5 - g5*g4 + g1*g4 + g5*g3)*s**2 + 2*g1*g4*s*t"
    " + (-g5*g3*g1 + g2*g1*g5 + g1*g4*g3 - g4**2*g5 + g1*g2*g4 + g5*g3*g4 - g2*g5*g4 + g4**2*g1)*s"
    " + (-g4*g5*g1 + g4**2*g1 + g1*g4*g3 + g1*g2*g4)*t"
    " + g3*g2*g1*g4 - g5*g3*g1*g4 + g1*g4**2*g3"
)

DD_S2 = (
    "g1**2*g4**2 + 2*g2*g1**2*g4 + g3**2*g5**2 + g2**2*g3**2 + g2**2*g1**2 + g5**2*g4**2"
    " + 2*g3*g2*g1*g4 - 2*g2*g1*g5*g4 - 2*g3*g5**2*g4 - 2*g1*g5*g4**2 + 2*g2**2*g3*g1"
    " - 2*g3**2*g5*g2 + 2*g5*g3*g2*g4 + 2*g5*g3*g1*g4 - 2*g5*g3*g1*g2"
)
DD_S1 = (
    "-g2**2*g1**3 - 2*g1**3*g2*g4 + 2*g1**2*g2*g4**2 + 2*g1**2*g5*g4**2 + g1**2*g4**3 - g1**3*g4**2"
    " - 2*g1*g5*g4**3 - 2*g3*g5**2*g4**2 - 2*g3*g2**2*g1**2 + 2*g3*g2*g1*g4**2 + g3**2*g2**2*g4"
    " + g5**2*g4**3 + 2*g1**2*g2*g5*g4 + 2*g2**2*g3*g1*g4 - 4*g3*g5*g1*g2*g4 + g5**2*g3**2*g4"
    " + g2**2*g1**2*g4 - g1*g5**2*g4**2 - g2**2*g3**2*g1 - g3**2*g5**2*g1 + 2*g5*g3*g2*g4**2"
    " + 2*g5*g1**2*g2*g3 + 2*g3**2*g5*g1*g2 - 2*g1*g2*g5*g4**2 + 2*g3*g5**2*g1*g4"
    " + 2*g3*g1*g5*g4**2 - 2*g3*g5*g1**2*g4 - 2*g3**2*g5*g2*g4 - 2*g1**2*g2*g3*g4"
)
DD_S0 = (
    "-g1**2*g3**2*g4**2 + g3*g1**2*g4**3 - g1**3*g3*g4**2 - g1**2*g2*g3**2*g4 - g1**3*g3*g2*g4"
    " - g3**2*g1*g2**2*g4 - g3**2*g1*g2*g4**2 + g3*g1*g2*g4**3 + g2**2*g3*g1*g4**2"
    " - g3*g5**2*g1**2*g4 + g1**3*g3*g5*g4 + g3**2*g5*g1*g4**2 - g3**2*g5**2*g1*g4"
    " + g3*g5**2*g1*g4**2 - g3*g5*g1*g4**3 - g3*g1**2*g2**2*g4 + g3**2*g5*g1**2*g4"
    " - 2*g3*g1*g2*g5*g4**2 + 2*g3*g1**2*g2*g5*g4 + 2*g3**2*g1*g2*g5*g4"
)
DD_FORMULA = f"({DD_S2})*s**2 + ({DD_S1})*s + ({DD_S0})"

# Consumed by the closed forms of g6, g8, g9 (cub_10 follows from them)
CONSUMED_CUBICS = (3, 7, 10, 19)

# (g1, g2, g3, g4, g5) are y1, y3, y4, y5, y7
BASE_INDICES = (1, 3, 4, 5, 7)


class BaseField5:
    """A base point (g1, ..., g5) of the projection, or the generic one.

    Numeric bases work in the context (s, t); the symbolic base keeps
    g1..g5 as variables of the context (g1, ..., g5, s, t).
    """

    def __init__(self, values: Optional[Sequence] = None):
        if values is None:
            self.values = None
            self.context = KST
        else:
            values = tuple(Fraction(v) for v in values)
            if len(values) != 5:
                raise ArityMismatch(f"A base point has 5 coordinates, got {len(values)}")
            if not any(values):
                raise NonGeneric("The base point is zero")
            self.values = values
            self.context = ST

    @classmethod
    def parse(cls, text: str) -> "BaseField5":
        return cls(parse_rational_list(text, 5))

    @classmethod
    def symbolic(cls) -> "BaseField5":
        return cls(None)

    @classmethod
    def from_point(cls, point: Sequence) -> "BaseField5":
        """The base of a point of P^39, in the point's own scaling."""
        return cls([point[i - 1] for i in BASE_INDICES])

    @property
    def is_symbolic(self) -> bool:
        return self.values is None

    @property
    def s(self) -> MPoly:
        return self.context.var("s")

    @property
    def t(self) -> MPoly:
        return self.context.var("t")

    def images(self) -> List[MPoly]:
        if self.is_symbolic:
            return list(self.context.gens()[:5])
        return [self.context.const(v) for v in self.values]

    def specialize(self, poly: MPoly) -> MPoly:
        """Map a polynomial of (g1, ..., g5, s, t) into this base's context."""
        return poly.substitute(self.images() + [self.s, self.t])

    def parse_formula(self, text: str) -> MPoly:
        return self.specialize(KST.parse(text))

    def check_generic(self) -> None:
        """Numeric genericity guards.

        Raises:
            NonGeneric: If qq is not quadratic in t or cub_8 degenerates
        """
        if self.is_symbolic:
            return
        g1, _, _, g4, g5 = self.values
        if g1 * g4 == 0:
            raise NonGeneric("g1*g4 vanishes: qq is not quadratic in t")
        if g1 == g5:
            raise NonGeneric("g1 = g5: cub_8 vanishes identically")

    def to_json(self):
        if self.is_symbolic:
            return "symbolic"
        return [str(v) for v in self.values]

    def __repr__(self) -> str:
        return f"BaseField5({self.to_json()})"


@lru_cache(maxsize=None)
def _formula(text: str) -> RatFunc:
    return RatFunc.parse(G, text)


def _pivot_map(base: BaseField5, g6: RatFunc = None, g8: RatFunc = None, g9: RatFunc = None) -> RationalMap:
    zero = RatFunc(base.context.zero())
    g15 = [RatFunc(p) for p in base.images()]
    components = g15 + [g6 or zero, RatFunc(base.s), g8 or zero, g9 or zero, RatFunc(base.t)]
    return RationalMap(base.context, components, name="fiber")


def closed_forms(base: BaseField5) -> Tuple[RatFunc, RatFunc, RatFunc]:
    """g6, g8, g9 as rational functions of (s, t) over the base.

    Raises:
        NonGeneric: If a printed denominator vanishes identically
    """
    try:
        g6 = _formula(G6_FORMULA).compose(_pivot_map(base))
        partial = _pivot_map(base, g6=g6)
        g8 = _formula(G8_FORMULA).compose(partial)
        g9 = _formula(G9_FORMULA).compose(partial)
    except DivisionByZeroPolynomial as exc:
        raise NonGeneric(f"Closed forms undefined at {base}: {exc}") from exc
    return g6, g8, g9


def substitution_map(base: BaseField5) -> RationalMap:
    """The map (s, t) -> (g1, ..., g9, g0) on the locus solved by the closed forms."""
    g6, g8, g9 = closed_forms(base)
    return _pivot_map(base, g6=g6, g8=g8, g9=g9)


def solve_g8_g9_g6(base: BaseField5, s, t) -> Tuple:
    """Evaluate the closed forms at field elements s and t.

    Returns:
        (g6, g8, g9)

    Raises:
        NonGeneric: If a printed denominator vanishes at (s, t)
    """
    if base.is_symbolic:
        raise ValueError("solve_g8_g9_g6 needs a numeric base")
    g1, g2, g3, g4, g5 = base.values
    point = [g1, g2, g3, g4, g5, 0, s, 0, 0, t]
    try:
        g6 = _formula(G6_FORMULA).evaluate(point)
        point[5] = g6
        g8 = _formula(G8_FORMULA).evaluate(point)
        g9 = _formula(G9_FORMULA).evaluate(point)
    except ZeroDenominator as exc:
        raise NonGeneric(f"Closed forms undefined at s = {s}, t = {t}") from exc
    return g6, g8, g9


def linear_in_t(poly: MPoly, qq: MPoly, gmap: RationalMap) -> Tuple[MPoly, MPoly]:
    """(a, b) with a*t + b the numerator of poly(gmap) reduced modulo qq.

    A common factor of a and b is removed; both are zero when the numerator
    is a multiple of qq.
    """
    composed = RatFunc(poly).compose(gmap)
    reduced = composed.num.pseudo_remainder(qq, "t")
    a, b = reduced.coeff_in("t", 1), reduced.coeff_in("t", 0)
    if a and b:
        common = a.gcd(b)
        a, b = a.exact_quotient(common), b.exact_quotient(common)
    return a, b


@lru_cache(maxsize=1)
def cube_basis() -> List[Tuple[str, MPoly]]:
    """A basis of the reduced cubic span listing the printed cub_j first."""
    span = reduced_cubics()
    printed = [(f"cub_{j}", printed_cubic(j)) for j in sorted(PRINTED_CUBICS)]
    candidates = printed + [(f"orbit_{k}", poly) for k, poly in enumerate(span.basis)]
    vectors = [span.vector(poly) for _, poly in candidates]
    return [candidates[k] for k in QMatrix(vectors).independent_rows()]


class QuadraticData(BaseModel):
    """qq, dd and the linear-in-t cube equations over one base."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    base: BaseField5
    qq: MPoly
    dd: MPoly
    cube_11: Tuple[MPoly, MPoly]
    cubes: Dict[str, Tuple[MPoly, MPoly]] = Field(default_factory=dict)
    vanishing: List[str] = Field(default_factory=list)
    cub8_matches: Optional[bool] = None
    pair_failures: List[Tuple[str, str]] = Field(default_factory=list)
    derived_dd_matches: Optional[bool] = None

    @property
    def cube_count(self) -> int:
        return len(self.cubes)

    def summary(self) -> Dict:
        a11, b11 = self.cube_11
        return {
            "base": self.base.to_json(),
            "qq": self.qq.to_text(),
            "dd": self.dd.to_text(),
            "cube_count": self.cube_count,
            "vanishing": self.vanishing,
            "deg_a11": a11.degree("s"),
            "deg_b11": b11.degree("s"),
            "cub8_matches": self.cub8_matches,
            "pair_failures": len(self.pair_failures),
            "derived_dd_matches": self.derived_dd_matches,
        }


def build_qq_dd(base: BaseField5, full: bool = True) -> QuadraticData:
    """Build qq, dd and the cube equations over a base.

    Args:
        base: Numeric or symbolic base
        full: Also reduce the whole cubic basis and check every D_jk
            (numeric bases only)

    Raises:
        NonGeneric: If a guard or a printed denominator fails
        DegenerateQuadratic: If dd has no s**2 term
    """
    base.check_generic()
    gmap = substitution_map(base)
    qq = base.parse_formula(QQ_FORMULA)
    dd = base.parse_formula(DD_FORMULA)
    if dd.coeff_in("s", 2).is_zero:
        raise DegenerateQuadratic(f"dd has a vanishing leading coefficient at {base}")
    data = QuadraticData(base=base, qq=qq, dd=dd, cube_11=linear_in_t(printed_cubic(11), qq, gmap))
    data.cub8_matches = cub8_factorization_holds(base, qq, gmap)
    if full and not base.is_symbolic:
        for label, poly in cube_basis():
            composed = RatFunc(poly).compose(gmap)
            if composed.is_zero:
                data.vanishing.append(label)
                continue
            data.cubes[label] = linear_in_t(poly, qq, gmap)
        data.pair_failures = _pair_failures(data)
        data.derived_dd_matches = _derived_dd(data) == dd.monic()
        logger.info("Base %s: %d cube equations, %d consumed", base.to_json(),
                    data.cube_count, len(data.vanishing))
    return data


def _pair_determinants(data: QuadraticData):
    items = [(label, pair) for label, pair in data.cubes.items() if pair[0] or pair[1]]
    for (j, (aj, bj)), (k, (ak, bk)) in combinations(items, 2):
        yield j, k, aj * bk - ak * bj


def _pair_failures(data: QuadraticData) -> List[Tuple[str, str]]:
    failures = []
    for j, k, d_jk in _pair_determinants(data):
        if d_jk and not data.dd.divides(d_jk):
            logger.debug("dd does not divide D(%s, %s)", j, k)
            failures.append((j, k))
    return failures


def _derived_dd(data: QuadraticData) -> MPoly:
    common = None
    for _, _, d_jk in _pair_determinants(data):
        if d_jk:
            common = d_jk if common is None else common.gcd(d_jk)
    return common.monic() if common is not None else data.dd.context.zero()


def derived_dd(base: BaseField5) -> MPoly:
    """The monic gcd of all D_jk over a numeric base."""
    return _derived_dd(build_qq_dd(base))


def cub8_factorization_holds(base: BaseField5, qq: MPoly, gmap: RationalMap) -> bool:
    """cub_8 = -(g1 - g5) qq / (g0 g1 + g1 g4 + g1 g7 + g2 g1 - g5 g7 - g5 g4)."""
    composed = RatFunc(printed_cubic(8)).compose(gmap)
    g1, g5 = base.images()[0], base.images()[4]
    denominator = RatFunc(G.parse(CUB8_DENOMINATOR)).compose(gmap)
    return composed == RatFunc(-(g1 - g5) * qq) / denominator


def eliminated_remainder(base: BaseField5, data: QuadraticData = None) -> MPoly:
    """a11**2 * qq(s, -b11/a11), a polynomial in s (and g1..g5 when symbolic)."""
    data = data or build_qq_dd(base, full=False)
    a, b = data.cube_11
    q2, q1, q0 = (data.qq.coeff_in("t", k) for k in (2, 1, 0))
    return q2 * b * b - q1 * a * b + q0 * a * a


def divisibility_holds(base: BaseField5) -> bool:
    """dd divides the remainder of qq after t = -b11/a11."""
    data = build_qq_dd(base, full=False)
    remainder = eliminated_remainder(base, data)
    if base.is_symbolic:
        return remainder.pseudo_remainder(data.dd, "s").is_zero
    return data.dd.divides(remainder)


def random_bases(rng: np.random.RandomState, count: int, bound: int = 9) -> List[BaseField5]:
    """Random integer bases passing the genericity guards."""
    bases = []
    while len(bases) < count:
        base = BaseField5([int(v) for v in rng.randint(-bound, bound + 1, size=5)])
        try:
            base.check_generic()
            substitution_map(base)
        except NonGeneric:
            continue
        bases.append(base)
    return bases


def divisibility_check(symbolic: bool = False, samples: int = 25, seed: int = 0) -> Dict:
    """Check that dd divides the eliminated remainder.

    Args:
        symbolic: Work over the generic base instead of numeric samples
        samples: Number of random bases in numeric mode
        seed: Seed for numpy.random.RandomState

    Raises:
        DivisibilityFailure: If dd fails to divide at some base
    """
    bases = [BaseField5.symbolic()] if symbolic else random_bases(np.random.RandomState(seed), samples)
    failing = [base for base in bases if not divisibility_holds(base)]
    if failing:
        raise DivisibilityFailure(
            f"dd does not divide the eliminated polynomial at {len(failing)} of {len(bases)} bases, first {failing[0]}")
    logger.info("dd divisibility holds at %d bases", len(bases))
    return {
        "mode": "symbolic" if symbolic else "numeric",
        "bases": len(bases),
        "divisible": len(bases) - len(failing),
    }


def vanishing_cubics(base: BaseField5, with_kernel: bool = True) -> Dict:
    """Printed cubics that vanish after the closed-form substitution.

    With ``with_kernel`` and a numeric base, the dimension of the kernel of
    the substitution on the whole reduced cubic span is reported as well.
    """
    gmap = substitution_map(base)
    printed = [j for j in sorted(PRINTED_CUBICS) if RatFunc(printed_cubic(j)).compose(gmap).is_zero]
    result = {"printed": printed}
    if with_kernel and not base.is_symbolic:
        composed = [RatFunc(poly).compose(gmap) for poly in reduced_cubics().basis]
        common = base.context.one()
        for r in composed:
            common = common.lcm(r.den)
        numerators = [r.num * common.exact_quotient(r.den) for r in composed]
        monomials = sorted({m for p in numerators for m in p.terms()})
        position = {m: k for k, m in enumerate(monomials)}
        vectors = []
        for p in numerators:
            row = [0] * len(monomials)
            for m, c in p.terms().items():
                row[position[m]] = c
            vectors.append(row)
        rank = QMatrix(vectors, ncols=len(monomials)).rank()
        result["kernel_dimension"] = len(composed) - rank
    return result
