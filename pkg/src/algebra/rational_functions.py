"""
Rational functions and rational maps between variable contexts.
"""
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from sympy import fraction, together

from ..errors import ArityMismatch, ContextMismatch, DivisionByZeroPolynomial, ZeroDenominator
from .polynomials import MPoly, Scalar, VarContext


class RatFunc:
    """A reduced quotient num/den of polynomials in one context.

    The pair is kept canonical: numerator and denominator are coprime integer
    polynomials without a common integer content, and the denominator has a
    positive leading coefficient, so equal functions have identical
    representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly = None, reduce: bool = True):
        if den is None:
            den = num.context.one()
        if num.context != den.context:
            raise ContextMismatch("Numerator and denominator live in different contexts")
        if den.is_zero:
            raise ZeroDenominator("Rational function with zero denominator")
        if reduce:
            num, den = _canonical_pair(num, den)
        self.num = num
        self.den = den

    @classmethod
    def parse(cls, context: VarContext, text: str) -> "RatFunc":
        """Parse text such as ``(x1 - x3)/(1 - x3)``."""
        numer, denom = fraction(together(context.sympify(text)))
        den = context.from_expr(denom)
        if den.is_zero:
            raise ZeroDenominator(f"Zero denominator in '{text}'")
        return cls(context.from_expr(numer), den)

    @classmethod
    def constant(cls, context: VarContext, value: Scalar) -> "RatFunc":
        return cls(context.const(value))

    @property
    def context(self) -> VarContext:
        return self.num.context

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.context != self.context:
                raise ContextMismatch(
                    f"Cannot combine rational functions of '{self.context.name}' and '{other.context.name}'"
                )
            return other
        if isinstance(other, MPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(self.context, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDenominator("Division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __pow__(self, n: int):
        if n >= 0:
            return RatFunc(self.num ** n, self.den ** n, reduce=False)
        if self.is_zero:
            raise ZeroDenominator("Negative power of zero")
        return RatFunc(self.den ** (-n), self.num ** (-n))

    def equals(self, other) -> bool:
        """Equality by cross-multiplication, independent of normalization."""
        o = self._coerce(other)
        return (self.num * o.den - o.num * self.den).is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.context == other.context and self.num == other.num and self.den == other.den
        if isinstance(other, (MPoly, int, Fraction)):
            return self.equals(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self.to_text()})"

    def to_text(self) -> str:
        if self.den == 1:
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"

    def evaluate(self, point: Sequence):
        """Evaluate at a point; raises ZeroDenominator where the denominator vanishes."""
        den = self.den.evaluate(point)
        if den == 0:
            raise ZeroDenominator(f"Denominator {self.den.to_text()} vanishes at the point")
        return self.num.evaluate(point) / den

    def compose(self, rmap: "RationalMap") -> "RatFunc":
        """The function ``self(rmap(.))`` in the source context of ``rmap``."""
        num = compose_poly(self.num, rmap)
        den = compose_poly(self.den, rmap)
        if den.is_zero:
            raise DivisionByZeroPolynomial(
                f"Denominator {self.den.to_text()} becomes zero after substitution"
            )
        return num / den


def _canonical_pair(num: MPoly, den: MPoly) -> Tuple[MPoly, MPoly]:
    if num.is_zero:
        return num, den.context.one()
    p, q = num.poly.cancel(den.poly)
    num_content, num_prim = MPoly(num.context, p).primitive()
    den_content, den_prim = MPoly(den.context, q).primitive()
    ratio = num_content / den_content
    return num_prim.scale(ratio.numerator), den_prim.scale(ratio.denominator)


class RationalMap:
    """A tuple of rational functions in a source context, one per target variable."""

    def __init__(self, source: VarContext, components: Sequence[RatFunc], name: str = ""):
        components = tuple(components)
        for component in components:
            if component.context != source:
                raise ContextMismatch("Map components must live in the source context")
        self.source = source
        self.components = components
        self.name = name

    @classmethod
    def parse(cls, source: VarContext, texts: Sequence[str], name: str = "") -> "RationalMap":
        return cls(source, [RatFunc.parse(source, text) for text in texts], name=name)

    @classmethod
    def identity(cls, context: VarContext) -> "RationalMap":
        return cls(context, [RatFunc(g) for g in context.gens()], name="id")

    @property
    def arity(self) -> int:
        return len(self.components)

    def __call__(self, point: Sequence) -> List:
        if len(point) != self.source.arity:
            raise ArityMismatch(f"Map {self.name or '?'} expects {self.source.arity} coordinates")
        return [component.evaluate(point) for component in self.components]

    def compose(self, inner: "RationalMap") -> "RationalMap":
        """The map ``self o inner`` (apply ``inner`` first)."""
        if inner.arity != self.source.arity:
            raise ArityMismatch("Inner map arity does not match the outer source context")
        name = f"{self.name}*{inner.name}" if self.name and inner.name else ""
        return RationalMap(inner.source, [c.compose(inner) for c in self.components], name=name)

    def equals(self, other: "RationalMap") -> bool:
        return (self.arity == other.arity
                and all(a.equals(b) for a, b in zip(self.components, other.components)))

    def is_identity(self) -> bool:
        if self.arity != self.source.arity:
            return False
        return all(c.equals(RatFunc(g)) for c, g in zip(self.components, self.source.gens()))

    def common_denominator(self) -> MPoly:
        den = self.source.one()
        for component in self.components:
            den = den.lcm(component.den)
        return den


def compose_poly(poly: MPoly, rmap: RationalMap) -> RatFunc:
    """Substitute the components of ``rmap`` into a polynomial.

    The substitution is homogenized over the least common denominator L of the
    components, so only polynomial products are formed and one division by
    L**deg remains at the end.
    """
    if rmap.arity != poly.context.arity:
        raise ArityMismatch(
            f"Map has {rmap.arity} components, context '{poly.context.name}' has {poly.context.arity}"
        )
    source = rmap.source
    if poly.is_zero:
        return RatFunc(source.zero())
    common = rmap.common_denominator()
    numerators = [c.num * common.exact_quotient(c.den) for c in rmap.components]
    degree = poly.total_degree()
    common_powers: Dict[int, MPoly] = {0: source.one()}
    for k in range(1, degree + 1):
        common_powers[k] = common_powers[k - 1] * common
    images: Dict[Tuple[int, int], MPoly] = {}
    total = source.zero()
    for monom, coeff in poly.terms().items():
        term = common_powers[degree - sum(monom)].scale(coeff)
        for i, exp in enumerate(monom):
            if exp:
                key = (i, exp)
                if key not in images:
                    images[key] = numerators[i] ** exp
                term = term * images[key]
        total = total + term
    return RatFunc(total, common_powers[degree])

