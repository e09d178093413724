"""
Unit tests for the linear and cubic relations of the image variety.
"""
import pytest
import sys
import os

# Add the src directory to the path
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from src.embedding import Proj39, build_embedding_table, eval_phi, sample_points
from src.relations import (
    G,
    PRINTED_CUBICS,
    TwoTermCubic,
    check_printed_cubics,
    cubic_relation_set,
    linear_orbit,
    linear_relation_basis,
    membership,
    parse_linear,
    printed_cubic,
    printed_pivot_basis,
    reduced_cubics,
    sample_vanishing,
    span_is_stable,
    vanishes_under_embedding,
)
from src.roots import signed_perm

import numpy as np

X0 = (2, 3, 4, 5)

# g1..g9, g0 of the canonical vector phi(2,3,4,5)
G_X0 = (6, -3, -6, -6, -24, -1, -3, -8, 6, -6)


class TestLinearRelations:
    """Test the orbit of y3 - y4 + y5 - y6."""

    def test_rank(self):
        """Test that the orbit has rank 30."""
        forms, rank, _ = linear_relation_basis()
        assert rank == 30
        assert len(forms) > 30

    def test_pivot_expressions_match_printed(self):
        """Test that the solved expressions reproduce the printed ones."""
        _, _, basis = linear_relation_basis()
        assert basis.printed_mismatches() == []
        assert basis.expressions[2] == parse_linear("y1 - y5 + y4")
        assert basis.expressions[40] == parse_linear("-y5 + y4 + y1 + y13 - y12")

    def test_pivot_basis_kills_orbit(self):
        """Test that every orbit form vanishes after substitution."""
        _, _, basis = linear_relation_basis()
        assert all(basis.kills(form) for form in linear_orbit())

    def test_y14_at_sample_point(self):
        """Test y14 = y11 + y13 - y12 on the raw values at (2,3,4,5)."""
        values = build_embedding_table().evaluate(X0)
        assert values[10] + values[12] - values[11] == -24
        assert values[13] == -24

    def test_expand_recovers_point(self):
        """Test that the ten pivots determine the whole vector."""
        phi = eval_phi(X0)
        basis = printed_pivot_basis()
        assert tuple(basis.pivot_values(phi.coords)) == G_X0
        assert Proj39(basis.expand(G_X0)) == phi

    def test_parse_linear_rejects_nonlinear(self):
        """Test that a quadratic text is refused."""
        with pytest.raises(ValueError):
            parse_linear("y1*y2")


class TestCubicRelations:
    """Test the orbit of the two-term cubic."""

    def test_seed_vanishes_at_sample_point(self):
        """Test (-12)(-32)(-60) - (-24)(-24)(-40) = 0."""
        values = build_embedding_table().evaluate(X0)
        assert TwoTermCubic.seed().evaluate(values) == 0

    def test_seed_vanishes_symbolically(self):
        """Test the seed against the factored embedding polynomials."""
        assert TwoTermCubic.seed().vanishes_on_embedding()

    def test_s5_image_in_orbit(self):
        """Test that the s5 image of the seed is again an orbit member."""
        image = TwoTermCubic.seed().act(signed_perm("s5"))
        assert image in cubic_relation_set()

    def test_canonical_order(self):
        """Test that swapping the two monomials gives the same relation."""
        assert TwoTermCubic((3, 13, 19), (2, 12, 20)) == TwoTermCubic.seed()
        assert TwoTermCubic((20, 2, 12), (19, 13, 3), -1) != TwoTermCubic.seed()

    def test_export_format(self):
        """Test the JSON form of the seed."""
        assert TwoTermCubic.seed().to_json() == {"plus": [3, 13, 21], "minus": [4, 14, 20], "epsilon": 1}
        assert TwoTermCubic.seed().to_text() == "y3*y13*y21 - y4*y14*y20"

    def test_sample_of_orbit_vanishes(self):
        """Test 20 random orbit cubics in factored form."""
        assert sample_vanishing(20, seed=3)["failed"] == 0

    def test_printed_cubics_vanish_at_sample_point(self):
        """Test cub_j at the pivot values of phi(2,3,4,5)."""
        for j in PRINTED_CUBICS:
            assert printed_cubic(j).evaluate(G_X0) == 0, j

    def test_cub1_monomial(self):
        """Test that cub_1 has g2*g8*g0 with coefficient 1."""
        assert printed_cubic(1).terms()[(0, 1, 0, 0, 0, 0, 0, 1, 0, 1)] == 1

    def test_cub1_vanishes_under_embedding(self):
        """Test cub_1 after g -> y(x)."""
        assert vanishes_under_embedding(printed_cubic(1))
        assert not vanishes_under_embedding(G.var("g1") ** 3)

    def test_reduced_count(self):
        """Test that there are exactly 30 independent reduced cubics."""
        assert len(reduced_cubics()) == 30

    def test_printed_cubics_in_span(self):
        """Test span membership and vanishing of cub_1..cub_11, cub_19."""
        results = check_printed_cubics()
        assert all(r["in_span"] and r["vanishes"] for r in results.values())

    @pytest.mark.slow
    def test_span_stable(self):
        """Test that the simple generators preserve the reduced span."""
        assert all(span_is_stable().values())


class TestMembership:
    """Test exact membership in the variety."""

    def test_image_point(self):
        """Test phi(2,3,4,5)."""
        verdict = membership(eval_phi(X0))
        assert verdict.member
        assert verdict.cubic_checked == len(cubic_relation_set())

    def test_basis_vector(self):
        """Test that e_1 violates a linear relation containing y1."""
        verdict = membership(Proj39([1] + [0] * 39))
        assert not verdict.member
        assert verdict.cubic_checked == 0
        assert parse_linear(verdict.violated)[1] != 0

    def test_random_points(self):
        """Test phi(x) at random points."""
        for p in sample_points(np.random.RandomState(11), 10):
            assert membership(eval_phi(p)), p

    def test_cubic_violation(self):
        """Test a point on the linear space that is off the cubics."""
        basis = printed_pivot_basis()
        point = Proj39(basis.expand((1, 2, 3, 4, 5, 6, 7, 8, 9, 10)))
        verdict = membership(point)
        assert not verdict.member
        assert verdict.cubic_checked > 0


if __name__ == "__main__":
    pytest.main([__file__])
