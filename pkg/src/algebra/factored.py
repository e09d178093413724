"""
Rational functions kept as products of irreducible factors.

A Factored value is ``constant * prod(f**k)`` where each ``f`` is an
irreducible integer polynomial with positive leading coefficient and each
``k`` a nonzero integer. By unique factorization over Q, two Factored values
describe the same rational function exactly when the constants and the
exponent maps coincide, so identities between products of degree-15 are
checked without expanding them.
"""
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, Optional, Union

from ..errors import ZeroDenominator
from .polynomials import MPoly, Scalar, VarContext, from_qq
from .rational_functions import RatFunc, RationalMap


class Factored:
    """A nonzero rational function stored as constant times irreducible powers."""

    __slots__ = ("context", "constant", "factors")

    def __init__(self, context: VarContext, constant: Scalar = 1,
                 factors: Optional[Dict[MPoly, int]] = None):
        constant = Fraction(constant)
        if constant == 0:
            raise ZeroDenominator("Factored values are nonzero")
        self.context = context
        self.constant = constant
        self.factors = {f: k for f, k in (factors or {}).items() if k}

    @classmethod
    def from_poly(cls, poly: MPoly) -> "Factored":
        """Irreducible factorization of a nonzero polynomial over Q."""
        if poly.is_zero:
            raise ZeroDenominator("Cannot factor the zero polynomial")
        coeff, factor_list = poly.poly.factor_list()
        constant = from_qq(coeff)
        factors: Counter = Counter()
        for element, exponent in factor_list:
            content, prim = MPoly(poly.context, element).primitive()
            constant *= content ** exponent
            factors[prim] += exponent
        return cls(poly.context, constant, dict(factors))

    @classmethod
    def from_ratfunc(cls, value: Union[RatFunc, MPoly]) -> "Factored":
        if isinstance(value, MPoly):
            return cls.from_poly(value)
        return cls.from_poly(value.num) / cls.from_poly(value.den)

    @classmethod
    def product(cls, context: VarContext, values: Iterable["Factored"]) -> "Factored":
        result = cls(context)
        for value in values:
            result = result * value
        return result

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Factored(self.context, self.constant * other, self.factors)
        if not isinstance(other, Factored):
            return NotImplemented
        factors = Counter(self.factors)
        for f, k in other.factors.items():
            factors[f] += k
        return Factored(self.context, self.constant * other.constant, dict(factors))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Factored(self.context, self.constant / Fraction(other), self.factors)
        if not isinstance(other, Factored):
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> "Factored":
        return Factored(self.context, 1 / self.constant, {f: -k for f, k in self.factors.items()})

    def __neg__(self):
        return Factored(self.context, -self.constant, self.factors)

    def __pow__(self, n: int):
        return Factored(self.context, self.constant ** n, {f: k * n for f, k in self.factors.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Factored):
            return NotImplemented
        return (self.context == other.context and self.constant == other.constant
                and self.factors == other.factors)

    def __hash__(self) -> int:
        return hash((self.constant, frozenset(self.factors.items())))

    @property
    def is_constant(self) -> bool:
        return not self.factors

    def __repr__(self) -> str:
        return f"Factored({self.to_text()})"

    def to_text(self) -> str:
        parts = [str(self.constant)]
        for f, k in sorted(self.factors.items(), key=lambda item: item[0].to_text()):
            parts.append(f"({f.to_text()})" + (f"**{k}" if k != 1 else ""))
        return "*".join(parts)

    def to_ratfunc(self) -> RatFunc:
        num = self.context.const(self.constant)
        den = self.context.one()
        for f, k in self.factors.items():
            if k > 0:
                num = num * f ** k
            else:
                den = den * f ** (-k)
        return RatFunc(num, den)

    def evaluate(self, point):
        value = self.constant
        for f, k in self.factors.items():
            base = f.evaluate(point)
            if k < 0 and base == 0:
                raise ZeroDenominator(f"Factor {f.to_text()} vanishes at the point")
            value = value * base ** k if k > 0 else value / base ** (-k)
        return value

    def compose(self, rmap: RationalMap, cache: Optional[Dict[MPoly, "Factored"]] = None) -> "Factored":
        """Compose with a rational map, re-factoring each irreducible factor once.

        Args:
            rmap: Map whose source context becomes the context of the result
            cache: Optional map factor -> factored composite shared across calls

        Returns:
            The factored composite
        """
        cache = {} if cache is None else cache
        result = Factored(rmap.source, self.constant)
        for f, k in self.factors.items():
            if f not in cache:
                cache[f] = Factored.from_ratfunc(RatFunc(f).compose(rmap))
            result = result * cache[f] ** k
        return result
