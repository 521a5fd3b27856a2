#!/usr/bin/env python3
"""
Unit tests for the job runner and its report models
"""

import json

import pytest
from pydantic import ValidationError

from graph_confspace.core.config import ComputationConfig, Config, CycleConfig
from graph_confspace.core.error_handler import (
    BudgetExceededError, ErrorHandler, FileSystemError, FormulaArgumentError, GraphParsingError
)
from graph_confspace.core.runner import CheckRecord, FormulaRecord, JobReport, JobRunner, parse_range


class TestJobReport:
    """Test JobReport serialization"""

    def test_field_order(self):
        report = JobReport(command="homology", particles=2, betti=[1, 1], wall_time_seconds=0.5)
        keys = list(json.loads(report.to_json()))
        assert keys == [
            "command", "graph_fingerprint", "particles", "flavor", "subdivided_vertices", "subdivided_edges",
            "cell_counts", "betti", "torsion", "euler_characteristic", "formulas", "checks",
        ]

    def test_timings_opt_in(self):
        report = JobReport(command="homology", wall_time_seconds=0.5)
        assert "wall_time_seconds" not in json.loads(report.to_json())
        assert json.loads(report.to_json(include_timings=True))["wall_time_seconds"] == 0.5

    def test_trailing_newline_and_indent(self):
        text = JobReport(command="formula").to_json(indent=4)
        assert text.endswith("}\n")
        assert '\n    "command"' in text

    def test_has_mismatch(self):
        match = CheckRecord(n=2, m=1, flavor="unordered", equation="e", formula_value=1, oracle_value=1,
                            verdict="match")
        mismatch = CheckRecord(n=2, m=1, flavor="unordered", equation="e", formula_value=1, oracle_value=2,
                               verdict="mismatch")
        assert not JobReport(command="verify", checks=[match]).has_mismatch
        assert JobReport(command="verify", checks=[match, mismatch]).has_mismatch


class TestCheckRecord:
    """Test CheckRecord validation"""

    def test_mismatch_needs_both_values(self):
        with pytest.raises(ValidationError, match="both"):
            CheckRecord(n=2, m=1, flavor="unordered", equation="e", formula_value=1, verdict="mismatch")

    def test_unknown_verdict_rejected(self):
        with pytest.raises(ValidationError):
            CheckRecord(n=2, m=1, flavor="unordered", equation="e", verdict="close enough")

    def test_formula_record(self):
        record = FormulaRecord(variant="single-edge", equation="beta2-single-edge", value=1,
                               conjecture_conditional=True)
        assert record.model_dump()["conjecture_conditional"] is True


class TestParseRange:
    """Test parse_range"""

    @pytest.mark.parametrize("text, expected", [("4", [4]), ("2..5", [2, 3, 4, 5]), ("3..3", [3])])
    def test_valid(self, text, expected):
        assert parse_range(text) == expected

    @pytest.mark.parametrize("text", ["", "a..b", "5..2", "-1", "2...4"])
    def test_invalid(self, text):
        with pytest.raises(FormulaArgumentError):
            parse_range(text)


class TestJobRunner:
    """Test JobRunner jobs"""

    def setup_method(self):
        self.runner = JobRunner(Config(), ErrorHandler(log_errors=False))

    def test_load_graph(self, y_graph_file):
        graph, digest = self.runner.load_graph(str(y_graph_file))
        assert graph.root == "h"
        assert len(digest) == 64

    def test_load_missing_graph(self, tmp_path):
        with pytest.raises(FileSystemError):
            self.runner.load_graph(str(tmp_path / "missing.graph"))

    def test_load_malformed_graph(self, tmp_path):
        path = tmp_path / "bad.graph"
        path.write_text("edge a\n")
        with pytest.raises(GraphParsingError):
            self.runner.load_graph(str(path))

    def test_run_homology(self, y_graph_file):
        report = self.runner.run_homology(str(y_graph_file), 2)
        assert report.command == "homology"
        assert report.flavor == "unordered"
        assert (report.subdivided_vertices, report.subdivided_edges) == (4, 3)
        assert report.cell_counts == [6, 6]
        assert report.betti == [1, 1]
        assert report.torsion == [[], []]
        assert report.euler_characteristic == 0
        assert report.wall_time_seconds >= 0

    def test_run_homology_subdivides(self, y_graph_file):
        report = self.runner.run_homology(str(y_graph_file), 3, rank_only=True)
        assert report.subdivided_vertices == 7
        assert report.betti[1] == 3
        assert report.torsion is None

    def test_run_homology_ordered_bigint(self, y_graph_file):
        report = self.runner.run_homology(str(y_graph_file), 2, ordered=True, bigint=True)
        assert report.flavor == "ordered"
        assert report.cell_counts == [12, 12]
        assert report.betti == [1, 1]

    def test_run_homology_budget(self, y_graph_file):
        with pytest.raises(BudgetExceededError):
            self.runner.run_homology(str(y_graph_file), 2, budget=5)
        runner = JobRunner(Config(computation=ComputationConfig(cell_budget=5)), ErrorHandler(log_errors=False))
        with pytest.raises(BudgetExceededError):
            runner.run_homology(str(y_graph_file), 2)

    @pytest.mark.parametrize("variant, kwargs, expected", [
        ("star", {"stars": [4]}, 11),
        ("tree-pair", {"stars": [3, 3]}, 1),
        ("tree-recursive", {"stars": [3, 3]}, 1),
        ("tree-closed", {"stars": [3, 3]}, 1),
        ("tree-general", {"stars": [3, 3, 3], "m": 2}, 3),
        ("two-particle", {"components": [(0, 2, 0), (0, 1, 0)]}, 2),
        ("two-particle-multi", {"components": [(0, 1, 1), (0, 1, 1), (0, 1, 0)]}, 2),
        ("single-edge", {"betti_rows": [[0, 1, 1, 1, 1], [0, 1, 1, 1, 1]], "b2": [0, 0]}, 1),
    ])
    def test_run_formula(self, variant, kwargs, expected):
        n = 3 if variant == "star" else 4
        report = self.runner.run_formula(variant, n, **kwargs)
        formula, = report.formulas
        assert formula.variant == variant
        assert formula.value == expected
        assert formula.conjecture_conditional == (variant == "single-edge")
        assert report.torsion is None

    def test_run_formula_ordered(self):
        report = self.runner.run_formula("star", 3, stars=[3], ordered=True)
        assert report.flavor == "ordered"
        assert report.formulas[0].value == 13

    def test_run_formula_from_graph(self, y_graph_file):
        report = self.runner.run_formula("tree-general", 3, graph_file=str(y_graph_file))
        assert report.formulas[0].value == 3
        assert report.graph_fingerprint is not None

    def test_run_formula_argument_errors(self):
        with pytest.raises(FormulaArgumentError, match="exactly one"):
            self.runner.run_formula("star", 3, stars=[3, 4])
        with pytest.raises(FormulaArgumentError, match="two --component"):
            self.runner.run_formula("two-particle", 2, components=[(0, 1, 0)])
        with pytest.raises(FormulaArgumentError, match="--stars or --graph"):
            self.runner.run_formula("tree-closed", 4)
        with pytest.raises(FormulaArgumentError, match="Unknown formula variant"):
            self.runner.run_formula("torus", 2)

    def test_run_verify_stars(self):
        report = self.runner.run_verify([2, 3], [1], stars=[3])
        assert report.command == "verify"
        assert len(report.checks) == 4
        assert not report.has_mismatch

    def test_run_verify_graph_file(self, y_graph_file):
        report = self.runner.run_verify([3], [1], graph_file=str(y_graph_file), ordered=True, bigint=True)
        assert {c.oracle_value for c in report.checks} == {13}

    def test_run_verify_spans(self):
        report = self.runner.run_verify([2, 3], [1], stars=[3], spans=True)
        spans = [c for c in report.checks if c.equation == "cycle-basis-span"]
        assert [c.n for c in spans] == [2, 3]
        assert not report.has_mismatch

    def test_spectator_limit_from_config(self):
        runner = JobRunner(Config(cycles=CycleConfig(spectator_limit=1)))
        report = runner.run_verify([2], [1], stars=[4], spans=True)
        span, = [c for c in report.checks if c.equation == "cycle-basis-span"]
        assert (span.formula_value, span.oracle_value, span.verdict) == (1, 3, "mismatch")
        assert report.has_mismatch

    def test_run_verify_needs_a_graph(self):
        with pytest.raises(FormulaArgumentError, match="--graph or --stars"):
            self.runner.run_verify([2], [1])

    def test_dump_complex(self, y_graph_file):
        dump = self.runner.dump_complex(str(y_graph_file), 2)
        assert list(dump)[0] == "graph_fingerprint"
        assert dump["cell_counts"] == [6, 6]
        with pytest.raises(BudgetExceededError):
            self.runner.dump_complex(str(y_graph_file), 2, budget=3)
