"""
Unit tests for the command line interface and the verification runner.
"""
import json

import pytest
import sys
import os

# Add the src directory to the path
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

from src.algebra import QMatrix
from src.cli import build_parser, main
from src.embedding import eval_phi
from src.errors import ParseError
from src.models import CheckResult, VerificationConfig
from src.relations import cubic_relation_set
from src.relations.linear import PIVOTS
from src.verification import CHECKS, SECTIONS, VerificationRunner, checks_for, derived_constants, run_check
from src.verification import runner


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestCommands:
    """Test the verbs that compute a single object."""

    def test_eval(self, capsys):
        """Test the canonical point of phi(2,3,4,5)."""
        code, report = _run(capsys, "eval", "--x", "2,3,4,5")
        assert code == 0
        assert report["schema"] == 1
        assert report["result"]["point"] == list(eval_phi((2, 3, 4, 5)).coords)
        assert report["result"]["projection_p4"] == [2, -1, -2, -2, -8]

    def test_eval_matrix(self, capsys):
        """Test that the normalized matrix of (2,3,4,5) gives the same point."""
        matrix = "1,0,0,1,1,1,0,1,0,1,2,3,0,0,1,1,4,5"
        code, report = _run(capsys, "eval-matrix", "--matrix", matrix)
        assert code == 0
        assert report["result"]["point"] == list(eval_phi((2, 3, 4, 5)).coords)
        assert report["result"]["x"] == ["2", "3", "4", "5"]

    def test_orbit(self, capsys):
        """Test that the label orbit is transitive."""
        code, report = _run(capsys, "orbit", "--label", "(123,456)")
        assert code == 0
        assert report["result"]["size"] == 40

    def test_membership(self, capsys):
        """Test that phi(2,3,4,5) lies on the variety."""
        code, report = _run(capsys, "membership", "--x", "2,3,4,5")
        assert code == 0
        assert report["result"]["member"]

    def test_prolong(self, capsys):
        """Test the prolonged point of z = (2,3,5)."""
        code, report = _run(capsys, "prolong", "--z", "2,3,5")
        assert code == 0
        assert report["result"]["point"][:11] == [0] * 10 + [4]
        assert report["result"]["member"]

    def test_limit(self, capsys):
        """Test the limit along xi = (1,1,1,1)."""
        code, report = _run(capsys, "limit", "--xi", "1,1,1,1")
        assert code == 0
        assert report["result"]["point"][1] == 1

    def test_fiber(self, capsys):
        """Test the rational fiber over the base of phi(2,3,4,5)."""
        code, report = _run(capsys, "fiber", "--base", "2,-1,-2,-2,-8")
        assert code == 0
        assert report["result"]["d"] == 1
        assert sorted(report["result"]["s"]) == ["-1", "5"]

    def test_generator(self, capsys):
        """Test the printed map of s1."""
        code, report = _run(capsys, "generator", "--name", "s1")
        assert code == 0
        assert report["result"]["reflection"] == "s12"
        assert len(report["result"]["table"]) == 40

    def test_output_file(self, tmp_path, capsys):
        """Test that --out writes the report to a file."""
        target = tmp_path / "report.json"
        code = main(["eval", "--x", "2,3,4,5", "--out", str(target)])
        assert code == 0
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text())["command"] == "eval"

    def test_export_relations(self, capsys):
        """Test the relation export layout: vectors, two-term cubics, pivot expressions."""
        code, report = _run(capsys, "export-relations")
        assert code == 0
        result = report["result"]
        assert isinstance(result["linear"], list)
        assert all(len(form) == 40 and all(isinstance(c, int) for c in form) for form in result["linear"])
        assert QMatrix(result["linear"]).rank() == 30
        assert isinstance(result["cubic"], list)
        for relation in result["cubic"]:
            assert len(relation["plus"]) == 3 and len(relation["minus"]) == 3
            assert all(1 <= a <= 40 for a in relation["plus"] + relation["minus"])
        expressions = result["pivot_expressions"]
        assert len(expressions) == 30
        assert not {f"y{a}" for a in PIVOTS} & set(expressions)
        counts = result["counts"]
        assert counts["linear_orbit"] == len(result["linear"])
        assert counts["cubic_orbit"] == len(result["cubic"])
        assert counts["cubic_independent"] == 30


class TestExitCodes:
    """Test exit codes for bad input and failed computations."""

    def test_bad_rational(self, capsys):
        """Test that unparsable input exits with 2."""
        code, report = _run(capsys, "eval", "--x", "2,3,four,5")
        assert code == 2
        assert report["checks"][0]["status"] == "fail"

    def test_degenerate_point(self, capsys):
        """Test that D(x) = 0 is reported as bad input."""
        code, _ = _run(capsys, "eval", "--x", "0,3,4,5")
        assert code == 2

    def test_missing_option(self, capsys):
        """Test that a verb without its option exits with 2."""
        code, _ = _run(capsys, "prolong")
        assert code == 2

    def test_degenerate_z(self, capsys):
        """Test that coinciding points on the line are rejected."""
        code, _ = _run(capsys, "prolong", "--z", "2,2,5")
        assert code == 2

    def test_inadmissible_direction(self, capsys):
        """Test that a direction with xi1 = 0 is rejected."""
        code, _ = _run(capsys, "limit", "--xi", "0,1,2,3")
        assert code == 2

    def test_non_generic_base(self, capsys):
        """Test that g1 = g5 is a failed computation."""
        code, report = _run(capsys, "fiber", "--base", "1,2,3,4,1")
        assert code == 1
        assert report["checks"][0]["details"]["error"] == "NonGeneric"

    def test_invalid_samples(self, capsys):
        """Test that a non-positive sample count is a validation error."""
        code, report = _run(capsys, "verify", "linear", "--samples", "0")
        assert code == 2
        assert report["checks"][0]["details"]["error"] == "ValidationError"

    def test_unknown_verb(self):
        """Test that argparse rejects an unknown verb."""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["frobnicate"])


class TestVerificationRunner:
    """Test the verification sections."""

    def test_sections_cover_checks(self):
        """Test that every check belongs to a section."""
        assert set(checks_for(["all"])) == set(CHECKS)
        assert {name.split(".")[0] for name in CHECKS} == set(SECTIONS)

    def test_unknown_section(self):
        """Test that an unknown section is an input error."""
        with pytest.raises(ValueError):
            checks_for(["bogus"])

    def test_linear_section(self, capsys):
        """Test that verify linear reports rank 30."""
        code, report = _run(capsys, "verify", "linear")
        assert code == 0
        checks = {c["name"]: c for c in report["checks"]}
        assert checks["linear.rank"]["status"] == "pass"
        assert checks["linear.rank"]["details"]["value"] == 30

    def test_checks_sorted(self):
        """Test that the report lists checks by name."""
        report = VerificationRunner(VerificationConfig(samples=2)).run(["roots", "labels"])
        names = [c.name for c in report.checks]
        assert names == sorted(names)
        assert report.passed

    def test_skipped_in_default_mode(self):
        """Test that long-mode checks are skipped by default."""
        result = run_check("cubic.span_stable", VerificationConfig().model_dump())
        assert result["status"] == "skipped"

    def test_error_becomes_failed_check(self, monkeypatch):
        """Test that a module error is recorded instead of raised."""
        def broken(config):
            raise ParseError("broken input")
        monkeypatch.setitem(runner.CHECKS, "roots.catalog", broken)
        result = run_check("roots.catalog", VerificationConfig().model_dump())
        assert result["status"] == "fail"
        assert result["details"]["error"] == "ParseError"

    def test_degenerate_section(self):
        """Test the prolongation identities and the limit point with few samples."""
        report = VerificationRunner(VerificationConfig(samples=3)).run(["degenerate"])
        assert report.passed, [c for c in report.checks if c.status == "fail"]

    def test_derived_constants(self):
        """Test that the report carries the constants found by its checks."""
        report = VerificationRunner(VerificationConfig(samples=2)).run(["group", "linear"])
        assert report.derived["group_order"] == 51840
        assert report.derived["s6_order"] == 720
        assert report.derived["s6_with_sr_order"] == 1440
        assert report.derived["linear_rank"] == 30
        assert report.derived["linear_orbit"] >= 30
        assert "span_dimension" not in report.derived

    def test_derived_span_dimension(self):
        """Test that the degenerate section reports the span dimension."""
        report = VerificationRunner(VerificationConfig(samples=2)).run(["degenerate"])
        assert report.derived["span_dimension"] == 5

    def test_derived_cubic_orbit(self):
        """Test that the cubic orbit size and count are read from cubic.count."""
        check = CheckResult(**run_check("cubic.count", VerificationConfig().model_dump()))
        derived = derived_constants([check])
        assert derived["cubic_independent"] == 30
        assert derived["cubic_orbit"] == len(cubic_relation_set())

    def test_round_trips_meet_minimum(self, monkeypatch):
        """Test that the round trip count is raised to the minimum and quadrics are checked."""
        monkeypatch.setattr(runner, "MIN_ROUND_TRIPS", 3)
        result = run_check("fiber.round_trips", VerificationConfig(samples=1).model_dump())
        assert result["status"] == "pass"
        details = result["details"]
        assert details["checked"] == 3
        assert details["off_quadrics"] == []
        assert details["distinctness"] == []

    def test_round_trip_minimum_default(self):
        """Test the fixed lower bounds on sample counts."""
        assert runner.MIN_ROUND_TRIPS >= 50
        assert runner.MIN_EMBEDDING_POINTS >= 100

    def test_matrix_form_meets_minimum(self, monkeypatch):
        """Test that the matrix form check uses at least the minimum point count."""
        monkeypatch.setattr(runner, "MIN_EMBEDDING_POINTS", 4)
        result = run_check("embedding.matrix_form", VerificationConfig(samples=1).model_dump())
        assert result["status"] == "pass"
        assert result["details"]["points"] == 4

    def test_divisibility_reports_counts(self):
        """Test that the divisibility check passes on its counts."""
        result = run_check("fiber.divisibility", VerificationConfig(samples=2).model_dump())
        assert result["status"] == "pass"
        assert result["details"]["bases"] == 2
        assert result["details"]["divisible"] == 2

    def test_divisibility_short_count_fails(self, monkeypatch):
        """Test that fewer bases than requested is a failed check."""
        monkeypatch.setattr(runner, "divisibility_check",
                            lambda **kwargs: {"mode": "numeric", "bases": 1, "divisible": 1})
        result = run_check("fiber.divisibility", VerificationConfig(samples=2).model_dump())
        assert result["status"] == "fail"

    @pytest.mark.slow
    def test_coxeter_all_pairs_by_default(self):
        """Test that the birational Coxeter check covers all 15 pairs outside long mode."""
        result = run_check("equivariance.coxeter", VerificationConfig().model_dump())
        assert result["status"] == "pass"
        assert result["details"]["pairs"] == 15

    @pytest.mark.slow
    def test_all_sections(self):
        """Test verify all in default mode."""
        report = VerificationRunner(VerificationConfig(samples=5)).run(["all"])
        assert report.passed, [c.name for c in report.checks if c.status == "fail"]

    @pytest.mark.slow
    def test_parallel_matches_sequential(self):
        """Test that worker processes give the same report."""
        sequential = VerificationRunner(VerificationConfig(samples=2)).run(["roots", "linear"])
        parallel = VerificationRunner(VerificationConfig(samples=2, parallel=True, max_workers=2)).run(["roots", "linear"])
        assert [c.model_dump() for c in sequential.checks] == [c.model_dump() for c in parallel.checks]


if __name__ == "__main__":
    pytest.main([__file__])
