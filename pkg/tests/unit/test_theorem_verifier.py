#!/usr/bin/env python3
"""
Unit tests for the theorem verifier
"""

import pytest

from graph_confspace.complexes.cells import ORDERED
from graph_confspace.core.config import ComputationConfig
from graph_confspace.core.error_handler import BudgetExceededError, FormulaArgumentError
from graph_confspace.cycles.cycle_library import CycleLibrary
from graph_confspace.formulas.closed_forms import (
    EQ_SINGLE_EDGE, EQ_STAR, EQ_STAR_ORDERED, EQ_TREE_GENERAL, EQ_TWO_PARTICLE, EQ_TWO_PARTICLE_ORDERED
)
from graph_confspace.graphs.decomposition import TreeShape, tree_from_shape
from graph_confspace.validators.theorem_verifier import (
    CONDITIONAL_MATCH, EQ_CYCLE_SPAN, EQ_EULER_ORDERED, MATCH, MISMATCH, Check, TheoremVerifier
)


def by_equation(checks):
    return {check.equation: check for check in checks}


class TestCheck:
    """Test the Check record"""

    def test_passed(self):
        assert Check(2, 1, "unordered", EQ_STAR, 1, 1, MATCH).passed
        assert Check(2, 2, "unordered", EQ_SINGLE_EDGE, 1, 1, CONDITIONAL_MATCH).passed
        assert not Check(2, 1, "unordered", EQ_STAR, 1, 2, MISMATCH).passed


class TestTreeChecks:
    """Test tree and star verification"""

    def setup_method(self):
        self.verifier = TheoremVerifier()

    def test_star_first_homology(self, y_graph):
        checks = self.verifier.verify(y_graph, [2, 3], [1])
        assert len(checks) == 4
        assert [c.n for c in checks] == [2, 2, 3, 3]
        assert all(c.verdict == MATCH for c in checks)
        assert by_equation(checks[2:])[EQ_STAR].oracle_value == 3

    def test_double_y_second_homology(self):
        tree = tree_from_shape(TreeShape.from_degrees([3, 3]))
        check, = self.verifier.verify(tree, [4], [2])
        assert check.equation == EQ_TREE_GENERAL
        assert (check.formula_value, check.oracle_value, check.verdict) == (1, 1, MATCH)

    def test_order_above_star_count_vanishes(self, y_graph):
        check, = self.verifier.verify(y_graph, [2], [2])
        assert (check.formula_value, check.oracle_value) == (0, 0)

    def test_ordered_star(self, y_graph):
        checks = by_equation(self.verifier.verify(y_graph, [3], [1], ORDERED))
        assert set(checks) == {EQ_STAR_ORDERED, EQ_EULER_ORDERED}
        assert checks[EQ_STAR_ORDERED].oracle_value == 13
        assert checks[EQ_EULER_ORDERED].formula_value == 13
        assert all(c.verdict == MATCH for c in checks.values())

    def test_oracle_results_cached(self, y_graph):
        first = self.verifier.oracle(y_graph, 2)
        assert self.verifier.oracle(y_graph, 2) is first

    def test_cycle_basis_span(self, y_graph):
        verifier = TheoremVerifier(cycles=CycleLibrary())
        checks = verifier.verify(y_graph, [2, 3], [1])
        spans = [c for c in checks if c.equation == EQ_CYCLE_SPAN]
        assert [(c.n, c.formula_value, c.oracle_value) for c in spans] == [(2, 1, 1), (3, 3, 3)]
        assert all(c.verdict == MATCH for c in spans)

    def test_cycle_basis_span_skipped_without_library(self, y_graph):
        assert EQ_CYCLE_SPAN not in by_equation(self.verifier.verify(y_graph, [2], [1]))

    def test_cycle_basis_span_needs_enough_particles(self, y_graph):
        verifier = TheoremVerifier(cycles=CycleLibrary())
        assert EQ_CYCLE_SPAN not in by_equation(verifier.verify(y_graph, [3], [2]))

    @pytest.mark.slow
    def test_caterpillar(self):
        tree = tree_from_shape(TreeShape.from_degrees([3, 3, 3]))
        check, = self.verifier.verify(tree, [4], [2])
        assert (check.formula_value, check.oracle_value) == (3, 3)

    @pytest.mark.slow
    def test_double_y_five_particles(self):
        tree = tree_from_shape(TreeShape.from_degrees([3, 3]))
        check, = self.verifier.verify(tree, [5], [2])
        assert (check.formula_value, check.oracle_value) == (5, 5)


class TestOneConnectedChecks:
    """Test cut-vertex and single-edge verification"""

    def setup_method(self):
        self.verifier = TheoremVerifier()

    def test_figure_eight(self, figure_eight):
        check, = self.verifier.verify(figure_eight, [2], [2])
        assert check.equation == EQ_TWO_PARTICLE
        assert (check.formula_value, check.oracle_value, check.verdict) == (0, 0, MATCH)

    def test_figure_eight_ordered(self, figure_eight):
        check, = self.verifier.verify(figure_eight, [2], [2], ORDERED)
        assert check.equation == EQ_TWO_PARTICLE_ORDERED
        assert check.oracle_value == 0
        assert check.verdict == MATCH

    def test_theta_with_loop(self, theta_with_loop):
        checks = by_equation(self.verifier.verify(theta_with_loop, [2], [2]))
        assert checks[EQ_TWO_PARTICLE].oracle_value == 2
        assert checks[EQ_TWO_PARTICLE].verdict == MATCH
        assert checks[EQ_SINGLE_EDGE].formula_value == 2
        assert checks[EQ_SINGLE_EDGE].verdict == CONDITIONAL_MATCH

    def test_theta_with_loop_ordered(self, theta_with_loop):
        check, = self.verifier.verify(theta_with_loop, [2], [2], ORDERED)
        assert (check.formula_value, check.oracle_value) == (4, 4)

    def test_bridged_triangles(self, bridged_triangles):
        checks = by_equation(self.verifier.verify(bridged_triangles, [2], [2]))
        assert checks[EQ_TWO_PARTICLE].oracle_value == 1
        assert checks[EQ_TWO_PARTICLE].formula_value == 1
        assert checks[EQ_SINGLE_EDGE].formula_value == 1
        assert checks[EQ_SINGLE_EDGE].verdict == CONDITIONAL_MATCH

    @pytest.mark.parametrize("fixture_name, expected", [("bridged_triangles", 3), ("theta_with_loop", 7)])
    def test_single_edge_three_particles(self, request, fixture_name, expected):
        graph = request.getfixturevalue(fixture_name)
        check, = self.verifier.verify(graph, [3], [2])
        assert check.equation == EQ_SINGLE_EDGE
        assert (check.formula_value, check.oracle_value) == (expected, expected)
        assert check.verdict == CONDITIONAL_MATCH

    def test_no_formula_applies(self, triangle):
        with pytest.raises(FormulaArgumentError, match="No closed-form formula"):
            self.verifier.verify(triangle, [2], [2])


class TestBudget:
    """Test the cell budget"""

    def test_small_budget_refuses(self, y_graph):
        verifier = TheoremVerifier(budget=10)
        with pytest.raises(BudgetExceededError) as info:
            verifier.verify(y_graph, [2], [1])
        assert info.value.exit_code == 3
        assert info.value.budget == 10

    def test_budget_from_config(self, y_graph):
        verifier = TheoremVerifier(ComputationConfig(cell_budget=10))
        assert verifier.budget == 10
        with pytest.raises(BudgetExceededError):
            verifier.oracle(y_graph, 2)

    def test_triple_y_six_particles_refused(self):
        tree = tree_from_shape(TreeShape.from_degrees([3, 3, 3]))
        with pytest.raises(BudgetExceededError) as info:
            TheoremVerifier().verify(tree, [6], [3])
        assert info.value.particles == 6
        assert info.value.order == 3
        assert info.value.cells > 5_000_000
