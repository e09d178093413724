"""
Exact rationals and sparse multivariate polynomials over named variable contexts.

Polynomials are backed by sympy's sparse ``PolyRing`` over ``QQ`` with the
graded lexicographic order. The wrapper adds named contexts, context checks,
generic evaluation and the canonical text form used in reports.
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from sympy import Symbol, SympifyError, sympify
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import PolyRing

from ..errors import ArityMismatch, ContextMismatch, ParseError

Scalar = Union[int, Fraction]


def to_qq(value: Scalar):
    """Convert an int or Fraction to a ``QQ`` domain element."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    """Convert a ``QQ`` domain element back to a Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational written as ``p`` or ``p/q``.

    Args:
        text: Rational in decimal integer or fraction notation

    Returns:
        The parsed Fraction

    Raises:
        ParseError: If the text is not an exact rational
    """
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"Invalid rational '{text}': expected p or p/q") from exc


def parse_rational_list(text: str, length: int = None) -> List[Fraction]:
    """Parse a comma separated list of rationals, optionally checking its length."""
    parts = [part for part in str(text).split(",") if part.strip()]
    values = [parse_rational(part) for part in parts]
    if length is not None and len(values) != length:
        raise ArityMismatch(f"Expected {length} rationals, got {len(values)}")
    return values


def format_rational(value: Scalar) -> str:
    """Format a rational as ``p`` or ``p/q``."""
    return str(Fraction(value))


class VarContext:
    """An ordered tuple of variable names with its polynomial ring."""

    def __init__(self, name: str, variables: Sequence[str]):
        """Initialize the context.

        Args:
            name: Short name used in error messages
            variables: Distinct variable names in ring order
        """
        variables = tuple(variables)
        if not variables:
            raise ValueError("A variable context needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"Duplicate variable names in context '{name}'")
        self.name = name
        self.variables = variables
        self.ring = PolyRing(variables, QQ, grlex)
        self._symbols = {v: Symbol(v) for v in variables}

    @property
    def arity(self) -> int:
        return len(self.variables)

    def index(self, variable: str) -> int:
        try:
            return self.variables.index(variable)
        except ValueError:
            raise ParseError(f"Unknown variable '{variable}' in context '{self.name}'")

    def __repr__(self) -> str:
        return f"VarContext({self.name!r}, {self.variables!r})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, VarContext) and self.name == other.name
                and self.variables == other.variables)

    def __hash__(self) -> int:
        return hash((self.name, self.variables))

    def gens(self) -> Tuple["MPoly", ...]:
        return tuple(MPoly(self, g) for g in self.ring.gens)

    def var(self, variable: str) -> "MPoly":
        return MPoly(self, self.ring.gens[self.index(variable)])

    def const(self, value: Scalar) -> "MPoly":
        return MPoly(self, self.ring.ground_new(to_qq(value)))

    def zero(self) -> "MPoly":
        return MPoly(self, self.ring.zero)

    def one(self) -> "MPoly":
        return MPoly(self, self.ring.one)

    def from_terms(self, terms: Dict[Tuple[int, ...], Scalar]) -> "MPoly":
        """Build a polynomial from a map exponent-vector -> coefficient."""
        data = {}
        for monom, coeff in terms.items():
            if len(monom) != self.arity:
                raise ArityMismatch(f"Monomial {monom} has wrong length for '{self.name}'")
            if coeff:
                data[tuple(monom)] = to_qq(coeff)
        return MPoly(self, self.ring.from_dict(data) if data else self.ring.zero)

    def from_expr(self, expr) -> "MPoly":
        try:
            return MPoly(self, self.ring.from_expr(expr))
        except (ValueError, CoercionFailed) as exc:
            raise ParseError(f"Expression '{expr}' is not a polynomial in {self.variables}") from exc

    def sympify(self, text: str):
        """Turn text into a sympy expression using this context's symbols."""
        try:
            return sympify(text, locals=dict(self._symbols))
        except (SympifyError, SyntaxError, TypeError) as exc:
            raise ParseError(f"Cannot parse '{text}'") from exc

    def parse(self, text: str) -> "MPoly":
        """Parse text such as ``x1*x4 - x2*x3`` into a polynomial."""
        return self.from_expr(self.sympify(text))


class MPoly:
    """A polynomial with rational coefficients in a fixed variable context."""

    __slots__ = ("context", "poly")

    def __init__(self, context: VarContext, poly):
        self.context = context
        self.poly = poly

    # -- construction helpers -------------------------------------------------

    def _wrap(self, poly) -> "MPoly":
        return MPoly(self.context, poly)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.context != self.context:
                raise ContextMismatch(
                    f"Cannot combine polynomials of '{self.context.name}' and '{other.context.name}'"
                )
            return other.poly
        if isinstance(other, (int, Fraction)):
            return self.context.ring.ground_new(to_qq(other))
        return None

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self._wrap(self.poly + p)

    __radd__ = __add__

    def __sub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self._wrap(self.poly - p)

    def __rsub__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self._wrap(p - self.poly)

    def __mul__(self, other):
        p = self._coerce(other)
        if p is None:
            return NotImplemented
        return self._wrap(self.poly * p)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.poly)

    def __pow__(self, n: int):
        if n == 0:
            return self.context.one()
        return self._wrap(self.poly ** n)

    def scale(self, value: Scalar) -> "MPoly":
        return self._wrap(self.poly.mul_ground(to_qq(value)))

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.context == other.context and self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly == self.context.ring.ground_new(to_qq(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.context, frozenset(self.poly.items())))

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __repr__(self) -> str:
        return f"MPoly({self.context.name}: {self.to_text()})"

    # -- inspection -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.poly

    @property
    def is_constant(self) -> bool:
        return self.poly.is_ground

    def terms(self) -> Dict[Tuple[int, ...], Fraction]:
        return {m: from_qq(c) for m, c in self.poly.items()}

    def total_degree(self) -> int:
        if not self.poly:
            return -1
        return max(sum(m) for m in self.poly.itermonoms())

    def degree(self, variable: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.poly:
            return -1
        return self.poly.degree(self.context.index(variable))

    def low_degree(self, variable: str) -> int:
        """Smallest exponent of ``variable`` among the terms."""
        if not self.poly:
            return -1
        i = self.context.index(variable)
        return min(m[i] for m in self.poly.itermonoms())

    def leading_coefficient(self) -> Fraction:
        return from_qq(self.poly.LC)

    def constant_term(self) -> Fraction:
        return from_qq(self.poly.const())

    def coeff_in(self, variable: str, degree: int) -> "MPoly":
        """Coefficient of ``variable**degree`` as a polynomial in the others."""
        return self._wrap(self.poly.coeff_wrt(self.context.index(variable), degree))

    def variables_used(self) -> Tuple[str, ...]:
        used = set()
        for monom in self.poly.itermonoms():
            used.update(i for i, e in enumerate(monom) if e)
        return tuple(v for i, v in enumerate(self.context.variables) if i in used)

    # -- normal forms ---------------------------------------------------------

    def primitive(self) -> Tuple[Fraction, "MPoly"]:
        """Split into (content, integer primitive part with positive leading coefficient)."""
        if not self.poly:
            return Fraction(0), self
        # QQ content is gcd(numerators)/lcm(denominators), so the quotient is integral
        content, prim = self.poly.primitive()
        if prim.LC < 0:
            prim = -prim
            content = -content
        return from_qq(content), self._wrap(prim)

    def monic(self) -> "MPoly":
        return self._wrap(self.poly.monic())

    def to_text(self) -> str:
        """Canonical text: terms in graded lexicographic order, ``p/q`` coefficients."""
        if not self.poly:
            return "0"
        pieces = []
        for monom, coeff in self.poly.terms():
            coeff = from_qq(coeff)
            factors = []
            for name, exp in zip(self.context.variables, monom):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}**{exp}")
            magnitude = abs(coeff)
            if not factors:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = format_rational(magnitude) + "*" + "*".join(factors)
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    # -- evaluation and substitution ------------------------------------------

    def evaluate(self, point: Sequence):
        """Evaluate at a point whose entries support ring arithmetic with Fractions.

        Args:
            point: One value per context variable (Fractions, ints or
                quadratic field elements)

        Returns:
            The value, of the same kind as the point entries
        """
        if len(point) != self.context.arity:
            raise ArityMismatch(
                f"Point has {len(point)} entries, context '{self.context.name}' has {self.context.arity}"
            )
        powers: Dict[Tuple[int, int], object] = {}
        total = Fraction(0)
        for monom, coeff in self.poly.iterterms():
            term = from_qq(coeff)
            for i, exp in enumerate(monom):
                if exp:
                    key = (i, exp)
                    if key not in powers:
                        powers[key] = point[i] ** exp
                    term = term * powers[key]
            total = total + term
        return total

    def substitute(self, images: Sequence["MPoly"], target: VarContext = None) -> "MPoly":
        """Ring homomorphism: replace each variable by a polynomial of another context.

        Args:
            images: One polynomial per variable, all in the same context
            target: Target context, needed only when ``images`` is empty

        Returns:
            The substituted polynomial in the target context
        """
        if len(images) != self.context.arity:
            raise ArityMismatch(
                f"Substitution has {len(images)} images, context '{self.context.name}' has {self.context.arity}"
            )
        target = target or images[0].context
        for image in images:
            if image.context != target:
                raise ContextMismatch("Substitution images live in different contexts")
        ring = target.ring
        powers: Dict[Tuple[int, int], object] = {}
        result = ring.zero
        for monom, coeff in self.poly.iterterms():
            term = ring.ground_new(coeff)
            for i, exp in enumerate(monom):
                if exp:
                    key = (i, exp)
                    if key not in powers:
                        powers[key] = images[i].poly ** exp
                    term = term * powers[key]
            result = result + term
        return MPoly(target, result)

    # -- division -------------------------------------------------------------

    def divides(self, other: "MPoly") -> bool:
        """True when ``self`` divides ``other`` exactly in the polynomial ring."""
        p = self._coerce(other)
        if not self.poly:
            return not p
        _, remainder = p.div([self.poly])
        return not remainder

    def exact_quotient(self, divisor: "MPoly") -> "MPoly":
        d = self._coerce(divisor)
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        (quotient,), remainder = self.poly.div([d])
        if remainder:
            raise ArithmeticError("polynomial division is not exact")
        return self._wrap(quotient)

    def pseudo_remainder(self, divisor: "MPoly", variable: str) -> "MPoly":
        """Pseudo-remainder with respect to ``variable`` (``LC**k * self = q*divisor + r``)."""
        d = self._coerce(divisor)
        return self._wrap(self.poly.prem(d, self.context.index(variable)))

    def gcd(self, other: "MPoly") -> "MPoly":
        return self._wrap(self.poly.gcd(self._coerce(other)))

    def lcm(self, other: "MPoly") -> "MPoly":
        return self._wrap(self.poly.lcm(self._coerce(other)))


def univar_gcd(p: MPoly, q: MPoly, variable: str) -> MPoly:
    """Monic gcd of two polynomials in which only ``variable`` occurs.

    Raises:
        ValueError: If another variable occurs in either polynomial
    """
    for poly in (p, q):
        extra = [v for v in poly.variables_used() if v != variable]
        if extra:
            raise ValueError(f"univar_gcd expects polynomials in {variable} only, found {extra}")
    g = p.gcd(q)
    return g.monic() if g else g


def product(polys: Iterable[MPoly], context: VarContext) -> MPoly:
    result = context.one()
    for poly in polys:
        result = result * poly
    return result
