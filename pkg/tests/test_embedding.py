"""
Unit tests for the embedding polynomials, the matrix form and the generator tables.
"""
from fractions import Fraction

import numpy as np
import pytest
import sys
import os

# Add the src directory to the path
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from src.errors import DegenerateMatrix, DegeneratePoint, IdentityFailure, Undefined, UnknownGenerator, ZeroVector
from src.embedding import (
    MAP_NAMES,
    Matrix36,
    PointM,
    ProjectivePoint,
    Proj39,
    build_embedding_table,
    column_transposition_check,
    coxeter_relation_holds,
    discriminant,
    equivariant_at,
    eval_phi,
    generator_map,
    matrix_from_point,
    normalize_matrix,
    phi80,
    phi_from_matrix,
    projection_p4,
    resolve_association_reading,
    sample_points,
    verify_equivariance,
)
from src.embedding.matrix import conic_constant, matrix_coordinates
from src.roots import signed_perm


X0 = (2, 3, 4, 5)

PHI_X0 = (
    6, 6, -3, -6, -6, -3, -24, -27, -24, -15,
    -1, -3, -8, -6, 6, 6, 8, 15, -6, -10,
    -15, -24, -3, -8, -15, -10, 6, 6, 8, 15,
    -1, -3, -6, -10, -6, -10, -15, -24, 1, 1,
)


@pytest.fixture(scope="module")
def table():
    return build_embedding_table()


@pytest.fixture(scope="module")
def points():
    return sample_points(np.random.RandomState(7), 5)


class TestEmbeddingTable:
    """Test the 40 polynomials in the chart."""

    def test_raw_values(self, table):
        """Test y1, y2, y3 and y40 at (2,3,4,5)."""
        values = table.evaluate(X0)
        assert values[:7] == [24, 24, -12, -24, -24, -12, -96]
        assert values[39] == 4

    def test_y39_is_d1_d2(self, table):
        """Test y39 = D1 * D2."""
        assert table.y(39) == table.factors["D1"] * table.factors["D2"]

    def test_sample_linear_identity(self, table):
        """Test y2 - y1 + y5 - y4 = 0 and y3 - y4 + y5 - y6 = 0."""
        assert (table.y(2) - table.y(1) + table.y(5) - table.y(4)).is_zero
        assert (table.y(3) - table.y(4) + table.y(5) - table.y(6)).is_zero

    def test_factored_forms_agree(self, table):
        """Test that the factored rows expand to the polynomials."""
        for a in (0, 10, 14, 30, 39):
            assert table.factored[a].to_ratfunc() == table.polys[a]

    def test_labels(self, table):
        """Test the labels of y1 and y39."""
        assert str(table.label(1)) == "(156,234)"
        assert str(table.label(39)) == "(14,56,23)"


class TestDiscriminant:
    """Test D(x) and the degenerate points."""

    def test_generic_point(self):
        """Test D(2,3,4,5) != 0."""
        assert discriminant(X0) != 0

    def test_degenerate_points(self):
        """Test x1 = 0 and x1 x4 = x2 x3."""
        assert discriminant((0, 3, 4, 5)) == 0
        assert discriminant((2, 3, 4, 6)) == 0

    def test_eval_phi_rejects_degenerate(self):
        """Test that eval_phi raises DegeneratePoint when D(x) = 0."""
        with pytest.raises(DegeneratePoint):
            eval_phi((2, 3, 4, 6))


class TestEvalPhi:
    """Test the projective point phi(x)."""

    def test_canonical_vector(self):
        """Test the canonical 40-vector at (2,3,4,5)."""
        assert eval_phi(X0).coords == PHI_X0

    def test_point_m_input(self):
        """Test that PointM and plain tuples give the same point."""
        assert eval_phi(PointM.parse("2,3,4,5")) == eval_phi(X0)

    def test_projective_equality(self):
        """Test that scaling does not change the point."""
        values = build_embedding_table().evaluate(X0)
        assert Proj39([Fraction(-3, 7) * v for v in values]) == eval_phi(X0)

    def test_projection_p4(self):
        """Test y1:y3:y4:y5:y7 at (2,3,4,5)."""
        assert projection_p4(eval_phi(X0)).coords == (2, -1, -2, -2, -8)

    def test_projection_undefined(self):
        """Test that the projection fails when y1, y3, y4, y5, y7 vanish."""
        point = Proj39([0] * 10 + [1] * 30)
        with pytest.raises(Undefined):
            projection_p4(point)

    def test_zero_vector(self):
        """Test that the zero vector is not a projective point."""
        with pytest.raises(ZeroVector):
            ProjectivePoint([0, 0, 0])

    def test_phi80(self):
        """Test the 80 coordinates (y, -y)."""
        coords = phi80(eval_phi(X0))
        assert len(coords) == 80
        assert coords[40] == -6


class TestMatrixForm:
    """Test the minor products of a 3x6 matrix."""

    def test_conic_determinant_is_q(self):
        """Test that the conic determinant of the normalized matrix is -Q."""
        assert conic_constant(build_embedding_table().factors["Q"]) == -1

    def test_matches_chart_formula(self, points):
        """Test phi_from_matrix against eval_phi."""
        for p in [PointM(X0)] + points:
            assert phi_from_matrix(matrix_from_point(p)) == eval_phi(p)

    def test_global_sign(self, table):
        """Test that the two formulas differ by a single global sign."""
        raw = matrix_coordinates(matrix_from_point(X0))
        assert raw == [-v for v in table.evaluate(X0)]

    def test_scaling_law(self):
        """Test y(gAh) = det(g)^6 det(h)^3 y(A)."""
        a = matrix_from_point(X0)
        g = [[1, 2, 0], [0, 1, 3], [1, 0, 1]]
        h = [2, 1, 3, 1, 1, 5]
        moved = matrix_coordinates(a.left_multiply(g).scale_columns(h))
        factor = 7 ** 6 * 30 ** 3
        assert moved == [factor * v for v in matrix_coordinates(a)]

    def test_normalize_matrix(self):
        """Test that normalization undoes GL3 and column scaling."""
        a = matrix_from_point(X0).left_multiply([[1, 2, 0], [0, 1, 3], [1, 0, 1]]).scale_columns([2, 1, 3, 1, 1, 5])
        assert normalize_matrix(a) == PointM(X0)

    def test_degenerate_matrix(self):
        """Test that collinear points are rejected."""
        a = Matrix36([[1, 0, 0, 1, 1, 1], [0, 1, 0, 1, 1, 2], [0, 0, 1, 1, 1, 3]])
        with pytest.raises(DegenerateMatrix):
            phi_from_matrix(a)

    def test_parse(self):
        """Test 18 rationals row-major."""
        a = Matrix36.parse("1,0,0,1,1,1, 0,1,0,1,2,3, 0,0,1,1,4,5")
        assert a.minor(1, 5, 6) == 2 * 5 - 3 * 4

    def test_column_transpositions(self, points):
        """Test that s1..s5 swap adjacent columns."""
        assert all(column_transposition_check(points[:3]).values())


class TestGenerators:
    """Test the birational generators."""

    def test_s1_value(self):
        """Test s1(2,3,4,5) = (1/2, 1/3, 2, 5/3)."""
        assert generator_map("s1")(X0) == [Fraction(1, 2), Fraction(1, 3), 2, Fraction(5, 3)]

    def test_association_value(self):
        """Test sr(2,3,4,5) = (-4,-3,-2,-1)."""
        assert generator_map("sr")(X0) == [-4, -3, -2, -1]

    def test_involutions(self):
        """Test g o g = id for all seven maps."""
        for name in MAP_NAMES:
            assert generator_map(name).is_involution(), name

    def test_aliases(self):
        """Test that reflection names select the same map."""
        assert generator_map("s123").name == "s6"
        with pytest.raises(UnknownGenerator):
            generator_map("s7")

    def test_coxeter_relations_sample(self):
        """Test one edge and one non-edge of the Coxeter graph."""
        assert coxeter_relation_holds("s1", "s2")
        assert coxeter_relation_holds("s2", "s5")
        assert coxeter_relation_holds("s3", "s6")

    @pytest.mark.slow
    def test_coxeter_relations_all(self):
        """Test (s_i s_j)^m = id for all pairs."""
        names = MAP_NAMES[:6]
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                assert coxeter_relation_holds(a, b), (a, b)

    def test_association_reading(self, points):
        """Test that only the product reading satisfies both checks."""
        results = resolve_association_reading(points[:3])
        assert results["product"] == {"involution": True, "table": True}
        assert not all(results["quotient"].values())

    def test_fiber_of_projection(self):
        """Test that phi(x) and phi(sr x) have the same image in P^4."""
        image = generator_map("sr")(X0)
        assert projection_p4(eval_phi(image)) == projection_p4(eval_phi(X0))
        assert eval_phi(image) != eval_phi(X0)


class TestEquivariance:
    """Test the printed transformation tables."""

    def test_s5_table(self):
        """Test that s5 has trivial cofactor and y4 -> -y5."""
        report = verify_equivariance("s5")
        assert report.passed
        assert report.cofactor == "1"
        assert report.signed_targets[3] == -5

    def test_s1_table(self):
        """Test the s1 table including y23 -> -c1 y39."""
        report = verify_equivariance("s1")
        assert report.passed
        assert report.signed_targets[22] == -39

    def test_sr_table(self):
        """Test that sr fixes y1..y10 and y7 -> c_r y7."""
        report = verify_equivariance("sr")
        assert report.passed
        assert report.signed_targets[6] == 7

    @pytest.mark.slow
    def test_all_tables(self):
        """Test all 280 rows."""
        for name in MAP_NAMES:
            assert verify_equivariance(name, strict=True).passed, name

    def test_printed_tables_match_reflections(self):
        """Test that the printed tables equal the combinatorial signed permutations."""
        for name in MAP_NAMES:
            gmap = generator_map(name)
            assert gmap.table == signed_perm(gmap.reflection), name

    def test_numeric_equivariance(self, points):
        """Test phi(g x) = T_g phi(x) at random points."""
        for name in MAP_NAMES:
            for p in points[:2]:
                assert equivariant_at(name, p), (name, p)

    def test_strict_mode_reports_row(self, monkeypatch):
        """Test that a corrupted printed row is reported with its index."""
        from src.embedding import generators
        from src.roots import SignedPerm40

        gmap = generators.generator_map("s2")
        rows = list(generators.TABLES["s2"])
        rows[2], rows[5] = 6, 3
        monkeypatch.setattr(gmap, "table", SignedPerm40.from_signed_targets(rows))
        with pytest.raises(IdentityFailure) as excinfo:
            verify_equivariance("s2", strict=True)
        assert excinfo.value.index == 3


if __name__ == "__main__":
    pytest.main([__file__])
