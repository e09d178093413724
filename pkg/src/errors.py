"""
Exception hierarchy shared by every module of the package.
"""


class CubicModuliError(Exception):
    """Base class for all errors raised by the package."""


# Input-shaped errors (bad arguments, unparsable text) are ValueErrors too,
# arithmetic failures are ArithmeticErrors.

class ParseError(CubicModuliError, ValueError):
    """Text could not be parsed as a rational, label or polynomial."""


class ContextMismatch(CubicModuliError, ValueError):
    """Two polynomials from different variable contexts were combined."""


class ArityMismatch(CubicModuliError, ValueError):
    """A point or map has the wrong number of components."""


class UnknownGenerator(CubicModuliError, ValueError):
    """A generator name is not one of s1..s6, sr (or s12..s56, s123, r)."""


class DivisionByZeroPolynomial(CubicModuliError, ArithmeticError):
    """A substitution produced the zero polynomial as a denominator."""


class ZeroDenominator(CubicModuliError, ArithmeticError):
    """A rational function was built with a zero denominator."""


class ZeroVector(CubicModuliError, ArithmeticError):
    """A projective point or root vector is identically zero."""


class ConstructionFailure(CubicModuliError, RuntimeError):
    """A catalog failed its build-time invariants."""


class NoMatch(CubicModuliError, RuntimeError):
    """An acted-on A2 triple did not match any catalog label."""


class BudgetExceeded(CubicModuliError, RuntimeError):
    """Group closure grew past the configured element budget."""


class IdentityFailure(CubicModuliError, ArithmeticError):
    """A printed identity does not hold symbolically."""

    def __init__(self, message: str, index: int = None):
        super().__init__(message)
        self.index = index


class DegeneratePoint(CubicModuliError, ValueError):
    """The discriminant D(x) vanishes at the given point."""


class DegenerateMatrix(CubicModuliError, ValueError):
    """A 3x6 matrix has a vanishing minor or conic determinant."""


class Undefined(CubicModuliError, ValueError):
    """A projection is undefined because all its coordinates vanish."""


class RankMismatch(CubicModuliError, ArithmeticError):
    """The linear relation system does not have the expected rank."""


class CountMismatch(CubicModuliError, ArithmeticError):
    """The number of independent cubic relations is not the expected one."""


class NonGeneric(CubicModuliError, ArithmeticError):
    """A denominator of the fiber formulas vanishes at the given base."""


class DegenerateQuadratic(CubicModuliError, ArithmeticError):
    """The quadratic dd has a vanishing leading coefficient."""


class DivisibilityFailure(CubicModuliError, ArithmeticError):
    """dd does not divide the eliminated polynomial."""


class DegenerateZ(CubicModuliError, ValueError):
    """A point of X(2,6) violates the nondegeneracy condition."""


class InadmissibleDirection(CubicModuliError, ValueError):
    """The leading vector of a limit computation is zero."""
