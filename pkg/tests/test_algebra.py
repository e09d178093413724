"""
Unit tests for exact arithmetic: polynomials, rational functions and linear algebra.
"""
import itertools
import pytest
import sys
import os
from fractions import Fraction

from hypothesis import given, settings, strategies as st

# Add the src directory to the path
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from src.algebra import (
    Factored,
    MPoly,
    QMatrix,
    RatFunc,
    RationalMap,
    VarContext,
    parse_rational,
    univar_gcd,
)
from src.errors import ArityMismatch, ContextMismatch, ParseError, ZeroDenominator


X = VarContext("x", ("x1", "x2", "x3", "x4"))
S = VarContext("s", ("s",))
D1_TEXT = "x1*x4 - x2*x3"
D2_TEXT = "x1*x4 - x4 + x2 - x2*x3 + x3 - x1"
Q_TEXT = "-x1*x2*x3 - x2*x3*x4 + x2*x3 + x1*x2*x4 + x1*x3*x4 - x1*x4"
S1_TEXTS = ("1/x1", "1/x2", "x3/x1", "x4/x2")

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polynomials(draw):
    """Random polynomials of degree at most 2 per variable in x1..x4."""
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, 2)] * 4),
        st.integers(-5, 5),
        max_size=5,
    ))
    return X.from_terms(terms)


points = st.tuples(small_rationals, small_rationals, small_rationals, small_rationals)


def brute_force_rank(rows):
    """Rank as the size of the largest nonvanishing minor."""
    def det(m):
        if len(m) == 1:
            return m[0][0]
        return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1:] for row in m[1:]])
                   for j in range(len(m)))

    n, k = len(rows), len(rows[0])
    for size in range(min(n, k), 0, -1):
        for rs in itertools.combinations(range(n), size):
            for cs in itertools.combinations(range(k), size):
                if det([[rows[r][c] for c in cs] for r in rs]) != 0:
                    return size
    return 0


class TestRational:
    """Test parsing and formatting of exact rationals."""

    def test_parse_fraction(self):
        """Test parsing p/q text."""
        assert parse_rational("-6/4") == Fraction(-3, 2)
        assert parse_rational(" 7 ") == 7

    def test_parse_invalid(self):
        """Test that malformed rationals raise ParseError."""
        with pytest.raises(ParseError):
            parse_rational("1/0")
        with pytest.raises(ParseError):
            parse_rational("two")


class TestPolynomialArithmetic:
    """Test MPoly arithmetic, evaluation and text forms."""

    def test_additive_inverse(self):
        """Test that x1 + (-x1) is the zero polynomial."""
        x1 = X.var("x1")
        assert (x1 + (-x1)).is_zero
        assert (x1 + (-x1)).terms() == {}

    def test_multiplicative_identity(self):
        """Test multiplication by one."""
        d1 = X.parse(D1_TEXT)
        assert d1 * 1 == d1
        assert d1.to_text() == "x1*x4 - x2*x3"

    def test_d1_times_q(self):
        """Test the product D1*Q at (2,3,4,5)."""
        point = [Fraction(v) for v in (2, 3, 4, 5)]
        assert X.parse(D1_TEXT).evaluate(point) == -2
        assert X.parse(Q_TEXT).evaluate(point) == -12
        assert X.parse(D2_TEXT).evaluate(point) == -2
        assert (X.parse(D1_TEXT) * X.parse(Q_TEXT)).evaluate(point) == 24

    def test_constant_term_at_zero(self):
        """Test that evaluating at the origin returns the constant term."""
        p = X.parse("3*x1**2 - x2 + 7/2")
        assert p.evaluate([0, 0, 0, 0]) == Fraction(7, 2)

    def test_context_mismatch(self):
        """Test that polynomials of different contexts never mix."""
        with pytest.raises(ContextMismatch):
            X.var("x1") + S.var("s")

    def test_arity_mismatch(self):
        """Test evaluation with the wrong number of coordinates."""
        with pytest.raises(ArityMismatch):
            X.var("x1").evaluate([1, 2, 3])

    def test_parse_rejects_foreign_variable(self):
        """Test that parsing an unknown symbol fails."""
        with pytest.raises(ParseError):
            X.parse("x1 + y7")

    def test_primitive_part(self):
        """Test content extraction with a positive leading coefficient."""
        content, prim = X.parse("-x1/2 + x2/3").primitive()
        assert content == Fraction(-1, 6)
        assert prim == X.parse("3*x1 - 2*x2")

    @given(polynomials(), polynomials(), polynomials())
    @settings(max_examples=40, deadline=None)
    def test_ring_laws(self, p, q, r):
        """Test associativity, commutativity and distributivity."""
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(polynomials(), polynomials(), points)
    @settings(max_examples=40, deadline=None)
    def test_evaluation_is_multiplicative(self, p, q, point):
        """Test eval(p*q) = eval(p)*eval(q)."""
        assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)


class TestUnivariateGcd:
    """Test gcd in a designated variable."""

    def test_simple_gcd(self):
        """Test gcd(s^2 - 1, s - 1) = s - 1."""
        assert univar_gcd(S.parse("s**2 - 1"), S.parse("s - 1"), "s") == S.parse("s - 1")

    def test_gcd_with_zero(self):
        """Test gcd(p, 0) is the normalized p."""
        assert univar_gcd(S.parse("2*s + 4"), S.zero(), "s") == S.parse("s + 2")

    def test_rejects_other_variables(self):
        """Test that a second variable is refused."""
        with pytest.raises(ValueError):
            univar_gcd(X.parse("x1 + x2"), X.parse("x1"), "x1")


class TestRationalFunctions:
    """Test RatFunc canonical forms and composition."""

    def test_content_and_monomial_cancellation(self):
        """Test 2*x1 / (4*x1^2) = 1 / (2*x1)."""
        r = RatFunc(X.parse("2*x1"), X.parse("4*x1**2"))
        assert r.num == X.const(1)
        assert r.den == X.parse("2*x1")

    def test_canonical_is_idempotent(self):
        """Test that canonicalizing twice changes nothing."""
        r = RatFunc(X.parse("x1**2 - 1"), X.parse("-3*x1 - 3"))
        again = RatFunc(r.num, r.den)
        assert again.num == r.num and again.den == r.den
        assert r.den.leading_coefficient() > 0

    def test_zero_denominator(self):
        """Test that a zero denominator is rejected."""
        with pytest.raises(ZeroDenominator):
            RatFunc(X.var("x1"), X.zero())

    def test_compose_with_identity(self):
        """Test that composing with the identity map returns the polynomial."""
        p = X.parse(Q_TEXT)
        composed = RatFunc(p).compose(RationalMap.identity(X))
        assert composed.num == p and composed.den == 1

    def test_compose_y1_with_s1(self):
        """Test y1(s1 x) = -(x1 x2)^-3 y6(x)."""
        y1 = X.parse(D1_TEXT) * X.parse(Q_TEXT)
        y6 = X.parse("x4 - x3") * X.parse(Q_TEXT)
        s1 = RationalMap.parse(X, S1_TEXTS, name="s1")
        composed = RatFunc(y1).compose(s1)
        expected = RatFunc(-y6, X.parse("x1**3*x2**3"))
        assert composed.equals(expected)
        assert composed == expected
        assert composed.evaluate([2, 3, 4, 5]) == Fraction(1, 18)

    def test_compose_y2_with_s1(self):
        """Test the fixed row y2(s1 x) = c1 y2(x)."""
        y2 = X.parse(D2_TEXT) * X.parse(Q_TEXT)
        s1 = RationalMap.parse(X, S1_TEXTS)
        composed = RatFunc(y2).compose(s1)
        assert (composed.num * X.parse("x1**3*x2**3") - y2 * composed.den).is_zero

    def test_s1_is_involution(self):
        """Test that s1 composed with itself is the identity map."""
        s1 = RationalMap.parse(X, S1_TEXTS)
        assert s1.compose(s1).is_identity()

    @given(points)
    @settings(max_examples=30, deadline=None)
    def test_evaluation_commutes_with_composition(self, point):
        """Test eval(p o m) = eval(p) o eval(m) where defined."""
        if point[0] == 0 or point[1] == 0:
            return
        p = X.parse(Q_TEXT) * X.parse(D2_TEXT)
        s1 = RationalMap.parse(X, S1_TEXTS)
        assert RatFunc(p).compose(s1).evaluate(point) == p.evaluate(s1(point))


class TestFactored:
    """Test factored forms of rational functions."""

    def test_factorization_normalizes(self):
        """Test factor normalization and constant extraction."""
        f = Factored.from_poly(X.parse("-2*(x2 - x1)*(x1*x4 - x2*x3)**2"))
        assert f.constant == 2
        assert f.factors[X.parse("x1 - x2")] == 1
        assert f.factors[X.parse(D1_TEXT)] == 2

    def test_equality_matches_rational_functions(self):
        """Test that factored equality agrees with cross-multiplication."""
        a = Factored.from_poly(X.parse(D1_TEXT) * X.parse(Q_TEXT))
        b = Factored.from_ratfunc(RatFunc(X.parse(D1_TEXT) * X.parse(Q_TEXT) * X.var("x1"), X.var("x1")))
        assert a == b
        assert a.to_ratfunc().equals(b.to_ratfunc())

    def test_compose_factored(self):
        """Test the s1 row of y1 in factored form."""
        y1 = Factored.from_poly(X.parse(D1_TEXT) * X.parse(Q_TEXT))
        y6 = Factored.from_poly(X.parse("x4 - x3") * X.parse(Q_TEXT))
        s1 = RationalMap.parse(X, S1_TEXTS)
        c1 = Factored.from_ratfunc(RatFunc.parse(X, "1/(x1*x2)**3"))
        assert y1.compose(s1) == -(c1 * y6)


class TestLinearAlgebra:
    """Test exact rank and nullspace."""

    def test_identity(self):
        """Test the 3x3 identity."""
        m = QMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert m.rank() == 3
        assert m.nullspace() == []

    def test_single_relation(self):
        """Test the 1x4 matrix (1,-1,1,-1)."""
        m = QMatrix([[1, -1, 1, -1]])
        assert m.rank() == 1
        kernel = m.nullspace()
        assert len(kernel) == 3
        for vector in kernel:
            assert sum(a * b for a, b in zip(vector, (1, -1, 1, -1))) == 0
            assert all(isinstance(v, int) for v in vector)

    def test_independent_rows_first_come(self):
        """Test that dependent rows are skipped in order."""
        m = QMatrix([[1, 1], [2, 2], [0, 1], [1, 0]])
        assert m.independent_rows() == [0, 2]

    @given(st.integers(1, 5), st.integers(1, 5), st.data())
    @settings(max_examples=40, deadline=None)
    def test_rank_matches_minors(self, n, k, data):
        """Test rank against brute-force minor expansion."""
        rows = [[data.draw(st.integers(-2, 2)) for _ in range(k)] for _ in range(n)]
        m = QMatrix(rows)
        assert m.rank() == brute_force_rank(rows)
        assert len(m.nullspace()) == k - m.rank()


if __name__ == "__main__":
    pytest.main([__file__])
