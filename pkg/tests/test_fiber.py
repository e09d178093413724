"""
Unit tests for the quadratic field, the elimination over the base and the
fiber reconstruction.
"""
from fractions import Fraction

import numpy as np
import pytest
import sys
import os

from hypothesis import given, strategies as st

# Add the src directory to the path
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from src.embedding import Proj39, eval_phi, generator_map, projection_p4, sample_points
from src.errors import DegenerateQuadratic, DivisibilityFailure, NonGeneric
from src.fiber import (
    BaseField5,
    QuadraticElement,
    build_qq_dd,
    closed_forms,
    conjugate_point,
    dd_roots,
    divisibility_check,
    divisibility_holds,
    fiber_round_trip,
    point_on_quadrics,
    random_bases,
    reconstruct_fiber,
    solve_g8_g9_g6,
    sqrt_rational,
    squarefree_decomposition,
    vanishing_cubics,
)
from src.fiber import elimination
from src.fiber.elimination import ST
from src.relations import G, printed_cubic

X0 = (2, 3, 4, 5)

# pi(phi(2,3,4,5)); in this scaling y12 = -1 and y19 = -2
BASE_X0 = (2, -1, -2, -2, -8)

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


class TestQuadraticField:
    """Test exact arithmetic in Q(sqrt d)."""

    def test_squarefree(self):
        """Test -50 = 5**2 * (-2) and 12 = 2**2 * 3."""
        assert squarefree_decomposition(-50) == (5, -2)
        assert squarefree_decomposition(12) == (2, 3)
        assert squarefree_decomposition(49) == (7, 1)

    def test_sqrt_rational(self):
        """Test sqrt(3/4) = (1/2) sqrt 3."""
        assert sqrt_rational(Fraction(3, 4)) == (Fraction(1, 2), 3)
        assert sqrt_rational(Fraction(9, 4)) == (Fraction(3, 2), 1)

    def test_sqrt_squares_back(self):
        """Test (sqrt 12)**2 = 12."""
        root = QuadraticElement.sqrt(12)
        assert (root.b, root.d) == (2, 3)
        assert root * root == 12

    def test_rational_elements_compare_with_fractions(self):
        """Test equality and hashing against plain rationals."""
        value = QuadraticElement(Fraction(3, 2))
        assert value == Fraction(3, 2)
        assert hash(value) == hash(Fraction(3, 2))
        assert value.is_rational

    def test_division_by_zero(self):
        """Test that 0 has no inverse."""
        with pytest.raises(ZeroDivisionError):
            QuadraticElement(0, 0, 2).inverse()

    def test_json(self):
        """Test the rational and sqrt_d components."""
        assert QuadraticElement(1, Fraction(-1, 2), 5).to_json() == {"rational": "1", "sqrt_d": "-1/2"}

    @given(rationals, rationals, rationals, rationals)
    def test_field_laws(self, a, b, c, e):
        """Test (x*y)/y = x and x - x = 0 in Q(sqrt 7)."""
        x = QuadraticElement(a, b, 7)
        y = QuadraticElement(c, e, 7)
        assert x - x == 0
        if y:
            assert (x * y) / y == x
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()

    def test_projective_point_with_radicals(self):
        """Test that a quadratic point is normalized by its first coordinate."""
        root = QuadraticElement.sqrt(2)
        point = Proj39([2] + [root] * 39)
        scaled = Proj39([2 * root] + [root * root] * 39)
        assert point == scaled
        assert point[0] == 1


class TestBaseField:
    """Test base points and the genericity guards."""

    def test_parse(self):
        """Test five rationals."""
        assert BaseField5.parse("2,-1,-2,-2,-8").values == tuple(Fraction(v) for v in BASE_X0)

    def test_from_point(self):
        """Test that the base of phi(x) is the projection."""
        phi = eval_phi(X0)
        assert list(projection_p4(phi).coords) == [2, -1, -2, -2, -8]
        assert BaseField5.from_point(phi).values == (6, -3, -6, -6, -24)

    def test_guards(self):
        """Test g1 = g5 and g1*g4 = 0."""
        with pytest.raises(NonGeneric):
            BaseField5([1, 2, 3, 4, 1]).check_generic()
        with pytest.raises(NonGeneric):
            BaseField5([0, 1, 2, 3, 4]).check_generic()
        with pytest.raises(NonGeneric):
            BaseField5([0, 0, 0, 0, 0])


class TestClosedForms:
    """Test g6, g8, g9 in terms of the base, s and t."""

    def test_values_at_sample_point(self):
        """Test that (g6, g8, g9) are the scaled y11, y13, y15 of phi(2,3,4,5)."""
        base = BaseField5(BASE_X0)
        assert solve_g8_g9_g6(base, -1, -2) == (Fraction(-1, 3), Fraction(-8, 3), 2)

    def test_unscaled_values(self):
        """Test the same point in the canonical scaling of phi."""
        base = BaseField5((6, -3, -6, -6, -24))
        assert solve_g8_g9_g6(base, -3, -6) == (-1, -8, 6)

    def test_vanishing_denominator(self):
        """Test that the g6 denominator 2t + 10s - 22 vanishes at s = 0, t = 11."""
        with pytest.raises(NonGeneric):
            solve_g8_g9_g6(BaseField5(BASE_X0), 0, 11)

    def test_consumed_cubics_vanish(self):
        """Test that cub_3, cub_7, cub_10 and cub_19 vanish after substitution."""
        assert vanishing_cubics(BaseField5(BASE_X0), with_kernel=False)["printed"] == [3, 7, 10, 19]

    def test_cub3_after_substitution(self):
        """Test cub_3 at the closed forms for an arbitrary (s, t)."""
        base = BaseField5((3, 1, -2, 5, 7))
        g6, g8, g9 = solve_g8_g9_g6(base, Fraction(1, 2), 4)
        values = [3, 1, -2, 5, 7, g6, Fraction(1, 2), g8, g9, 4]
        assert printed_cubic(3).evaluate(values) == 0
        assert printed_cubic(19).evaluate(values) == 0

    @pytest.mark.slow
    def test_symbolic_cub10(self):
        """Test that cub_10 reduces to zero over the generic base."""
        assert 10 in vanishing_cubics(BaseField5.symbolic())["printed"]


class TestQuadratics:
    """Test qq, dd and the cube equations."""

    def test_quadrics_vanish_at_sample_point(self):
        """Test dd and qq at the point's own (s, t)."""
        assert point_on_quadrics(eval_phi(X0)) == {"dd": True, "qq": True}

    def test_quadrics_at_random_points(self):
        """Test dd and qq at phi(x) for random x."""
        checked = 0
        for p in sample_points(np.random.RandomState(5), 8):
            try:
                result = point_on_quadrics(eval_phi(p))
            except NonGeneric:
                continue
            assert result == {"dd": True, "qq": True}, p
            checked += 1
        assert checked > 0

    def test_dd_leading_coefficient(self):
        """Test that dd = 11664 s**2 + ... at the unscaled base of phi(2,3,4,5)."""
        data = build_qq_dd(BaseField5((6, -3, -6, -6, -24)), full=False)
        assert data.dd == ST.parse("11664*s**2 - 139968*s - 524880")

    def test_cub8_factorization(self):
        """Test cub_8 = -(g1 - g5) qq / denominator."""
        assert build_qq_dd(BaseField5(BASE_X0), full=False).cub8_matches

    def test_cube11_degrees(self):
        """Test deg a11 <= 3 and deg b11 <= 4."""
        a11, b11 = build_qq_dd(BaseField5(BASE_X0), full=False).cube_11
        assert 0 <= a11.degree("s") <= 3
        assert 0 <= b11.degree("s") <= 4
        assert a11.degree("t") <= 0 and b11.degree("t") <= 0

    def test_degenerate_dd(self, monkeypatch):
        """Test that a vanishing s**2 coefficient is reported."""
        monkeypatch.setattr(elimination, "DD_FORMULA", "s + 1")
        with pytest.raises(DegenerateQuadratic):
            build_qq_dd(BaseField5(BASE_X0), full=False)

    def test_divisibility_numeric(self):
        """Test that dd divides the eliminated remainder at random bases."""
        result = divisibility_check(samples=5, seed=1)
        assert result["bases"] == 5
        assert result["divisible"] == 5

    def test_divisibility_failure(self, monkeypatch):
        """Test that a wrong dd is detected."""
        monkeypatch.setattr(elimination, "DD_FORMULA", "s**2 + 1")
        with pytest.raises(DivisibilityFailure):
            divisibility_check(samples=1, seed=1)

    @pytest.mark.slow
    def test_full_cube_list(self):
        """Test 26 cube equations whose determinants all contain dd."""
        data = build_qq_dd(BaseField5(BASE_X0))
        assert data.cube_count == 26
        assert data.vanishing == ["cub_3", "cub_7", "cub_10", "cub_19"]
        assert data.pair_failures == []
        assert data.derived_dd_matches

    @pytest.mark.slow
    def test_kernel_dimension(self):
        """Test that the substitution kills a 4-dimensional part of the span."""
        assert vanishing_cubics(BaseField5(BASE_X0))["kernel_dimension"] == 4

    @pytest.mark.slow
    def test_divisibility_symbolic(self):
        """Test dd divisibility over the generic base."""
        assert divisibility_holds(BaseField5.symbolic())


class TestReconstruction:
    """Test the two points over a base."""

    def test_dd_roots_double(self):
        """Test a square dd."""
        roots, discriminant, d = dd_roots(ST.parse("s**2 - 2*s + 1"))
        assert roots == (1, 1)
        assert discriminant == 0

    def test_dd_roots_irrational(self):
        """Test s**2 - 2."""
        roots, discriminant, d = dd_roots(ST.parse("s**2 - 2"))
        assert d == 2
        assert roots[0] == QuadraticElement(0, 1, 2)
        assert roots[1] == roots[0].conjugate()

    def test_dd_roots_degenerate(self):
        """Test a linear dd."""
        with pytest.raises(DegenerateQuadratic):
            dd_roots(ST.parse("s + 1"))

    def test_sample_point_fiber(self):
        """Test that the fiber over pi(phi(2,3,4,5)) is {phi(x), phi(sr x)}."""
        solution = reconstruct_fiber(BaseField5(BASE_X0))
        expected = {eval_phi(X0), eval_phi(generator_map("sr")(X0))}
        assert set(solution.points) == expected
        assert set(solution.s_values) == {-1, 5}
        assert solution.is_rational
        assert not solution.double_root
        assert solution.relations_satisfied

    def test_round_trips(self):
        """Test random points against their association images."""
        checked = 0
        for p in sample_points(np.random.RandomState(17), 6):
            try:
                result = fiber_round_trip(p)
            except NonGeneric:
                continue
            assert result["matches"], p
            assert result["distinct"] == result["expected_distinct"]
            checked += 1
        assert checked > 0

    def test_irrational_fiber(self):
        """Test that conjugation swaps the two points over a random base."""
        found = 0
        for base in random_bases(np.random.RandomState(2), 6):
            try:
                solution = reconstruct_fiber(base)
            except NonGeneric:
                continue
            assert solution.relations_satisfied
            if solution.d != 1:
                assert conjugate_point(solution.points[0]) == list(solution.points[1].coords)
                assert solution.points[0] != solution.points[1]
                found += 1
        assert found > 0

    def test_symbolic_base_rejected(self):
        """Test that a fiber needs numeric base values."""
        with pytest.raises(ValueError):
            reconstruct_fiber(BaseField5.symbolic())

    def test_closed_forms_context(self):
        """Test that numeric closed forms live in (s, t)."""
        g6, _, _ = closed_forms(BaseField5(BASE_X0))
        assert g6.context == ST
        assert G.arity == 10


if __name__ == "__main__":
    pytest.main([__file__])
