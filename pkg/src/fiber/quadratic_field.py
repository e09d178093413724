"""
Exact arithmetic in a quadratic field Q(sqrt d).
"""
from fractions import Fraction
from math import isqrt
from typing import Dict, Tuple, Union

from sympy import factorint

from ..algebra import format_rational

Rational = Union[int, Fraction]

# Trial division bound; a cofactor left above it stays inside d
FACTOR_LIMIT = 2 ** 20


def squarefree_decomposition(n: int) -> Tuple[int, int]:
    """Write a nonzero integer as k**2 * d with d free of small square factors.

    Returns:
        (k, d), with the sign of n carried by d
    """
    if n == 0:
        raise ValueError("0 has no squarefree decomposition")
    sign = -1 if n < 0 else 1
    k, d = 1, sign
    for prime, exp in factorint(abs(n), limit=FACTOR_LIMIT).items():
        root = isqrt(prime)
        if root * root == prime and prime > FACTOR_LIMIT:
            k *= root ** exp
            continue
        k *= prime ** (exp // 2)
        if exp % 2:
            d *= prime
    return k, d


def sqrt_rational(value: Rational) -> Tuple[Fraction, int]:
    """sqrt(value) = c * sqrt(d) with c rational and d squarefree (d = 1 when rational)."""
    value = Fraction(value)
    if value == 0:
        return Fraction(0), 1
    # p/q = p*q / q**2
    k, d = squarefree_decomposition(value.numerator * value.denominator)
    return Fraction(k, value.denominator), d


class QuadraticElement:
    """a + b*sqrt(d) with rational a, b and a fixed non-square d."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Rational, b: Rational = 0, d: int = 1):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)
        if self.b and self.d == 1:
            self.a += self.b
            self.b = Fraction(0)

    @classmethod
    def sqrt(cls, value: Rational) -> "QuadraticElement":
        c, d = sqrt_rational(value)
        if d == 1:
            return cls(c)
        return cls(0, c, d)

    # -- coercion -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuadraticElement):
            if other.b and self.b and other.d != self.d:
                raise ValueError(f"Cannot combine Q(sqrt {self.d}) with Q(sqrt {other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticElement(other, 0, self.d)
        return None

    def _field(self, other: "QuadraticElement") -> int:
        return self.d if self.b else other.d

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticElement(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticElement(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._field(o)
        return QuadraticElement(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticElement":
        return QuadraticElement(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> "QuadraticElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in a quadratic field")
        return QuadraticElement(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadraticElement(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadraticElement):
            if not self.b and not other.b:
                return self.a == other.a
            return self.a == other.a and self.b == other.b and self.d == other.d
        return NotImplemented

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    @property
    def is_rational(self) -> bool:
        return not self.b

    def to_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is irrational")
        return self.a

    def __repr__(self) -> str:
        if not self.b:
            return format_rational(self.a)
        return f"{format_rational(self.a)} + {format_rational(self.b)}*sqrt({self.d})"

    def to_json(self) -> Dict[str, str]:
        return {"rational": format_rational(self.a), "sqrt_d": format_rational(self.b)}
