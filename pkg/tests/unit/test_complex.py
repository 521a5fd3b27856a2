#!/usr/bin/env python3
"""
Unit tests for cells, chains and complex construction
"""

import math

import pytest

from graph_confspace.complexes.builder import (
    ComplexBuilder, boundary_of, build_complex, count_cells, iter_matchings
)
from graph_confspace.complexes.cells import ORDERED, UNORDERED, Cell, Chain, faces
from graph_confspace.complexes.dump import dump_chain, dump_complex
from graph_confspace.complexes.invariants import (
    connected_components, disjoint_union_component_count, euler_characteristic, is_closed_surface
)
from graph_confspace.core.error_handler import GraphStructureError, SubdivisionError
from graph_confspace.graphs.graph import Graph
from graph_confspace.graphs.subdivision import subdivide_for


class TestCells:
    """Test cells and the face rule"""

    def test_canonical_form(self):
        cell = Cell.of([(2, 3), 5, (1, 4), 0])
        assert cell.entities == (0, 5, (1, 4), (2, 3))
        assert cell.dimension == 2
        assert cell.is_valid()

    def test_overlapping_entities_invalid(self):
        assert not Cell.of([(1, 2), 2]).is_valid()
        assert not Cell.of([(1, 2), (2, 3)]).is_valid()

    def test_one_cell_faces(self):
        # d{e, v} = {iota(e), v} - {tau(e), v}
        assert faces(Cell.of([(1, 2), 4])) == [(Cell.of([2, 4]), 1), (Cell.of([1, 4]), -1)]

    def test_sign_follows_tau_rank(self):
        signed = dict(faces(Cell.of([(1, 2), (3, 4)])))
        assert signed[Cell.of([2, (3, 4)])] == 1
        assert signed[Cell.of([1, (3, 4)])] == -1
        assert signed[Cell.of([4, (1, 2)])] == -1
        assert signed[Cell.of([3, (1, 2)])] == 1

    def test_ordered_faces_keep_positions(self):
        cell = Cell((5, (1, 2)), True)
        assert faces(cell) == [(Cell((5, 2), True), 1), (Cell((5, 1), True), -1)]

    def test_named_and_describe(self, y_graph):
        complex_ = build_complex(y_graph, 2)
        cell = Cell.named(["a2", ("a1", "h")], complex_.numbering)
        assert cell.entities == (3, (1, 2))
        assert cell.describe(complex_.numbering) == ["a2", ["h", "a1"]]

    def test_boundary_of_validates_ranks(self, y_graph):
        numbering = build_complex(y_graph, 1).numbering
        with pytest.raises(GraphStructureError):
            boundary_of(Cell.of([(1, 9)]), numbering)
        assert boundary_of(Cell.of([1])).is_zero()


class TestChains:
    """Test chain arithmetic"""

    def test_zero_coefficients_dropped(self):
        a = Cell.of([1])
        b = Cell.of([2])
        chain = Chain(0, {a: 1, b: 0})
        assert len(chain) == 1
        assert (chain - chain).is_zero()

    def test_from_pairs_accumulates(self):
        a = Cell.of([1])
        chain = Chain.from_pairs(0, [(a, 2), (a, -1)])
        assert chain.terms == {a: 1}
        assert chain.scaled(3).terms == {a: 3}
        assert (-chain).terms == {a: -1}

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            Chain(0, {Cell.of([1]): 1}) + Chain(1, {Cell.of([(1, 2)]): 1})

    def test_boundary_of_boundary_vanishes(self):
        chain = Chain(2, {Cell.of([(1, 2), (3, 4), 7]): 1})
        assert chain.boundary().boundary().is_zero()


class TestComplexBuilder:
    """Test ComplexBuilder"""

    def setup_method(self):
        self.builder = ComplexBuilder()

    def test_y_graph_two_particles(self, y_graph):
        complex_ = self.builder.build(y_graph, 2)
        assert complex_.cell_counts == [6, 6]
        assert complex_.top_dimension == 1
        assert euler_characteristic(complex_) == 0

    def test_zero_particles_is_a_point(self, k5):
        complex_ = self.builder.build(k5, 0)
        assert complex_.cell_counts == [1]
        assert complex_.cells(0)[0].entities == ()

    def test_one_particle_is_the_graph(self, k5):
        complex_ = self.builder.build(k5, 1)
        assert complex_.cell_counts == [5, 10]

    @pytest.mark.parametrize("flavor", [UNORDERED, ORDERED])
    def test_boundary_squares_to_zero(self, k5, flavor):
        complex_ = self.builder.build(k5, 2, flavor)
        for k in range(2, complex_.top_dimension + 1):
            assert (complex_.boundary_matrix(k - 1) @ complex_.boundary_matrix(k)).is_zero()

    def test_boundary_squares_to_zero_three_particles(self, star_graph):
        complex_ = self.builder.build(subdivide_for(star_graph(4), 3), 3)
        # three disjoint outer edges of the subdivided star give 3-cells
        assert complex_.top_dimension == 3
        for k in (2, 3):
            assert (complex_.boundary_matrix(k - 1) @ complex_.boundary_matrix(k)).is_zero()

    def test_boundary_matrix_outside_range(self, y_graph):
        complex_ = self.builder.build(y_graph, 2)
        assert complex_.boundary_matrix(0).shape == (0, 6)
        assert complex_.boundary_matrix(2).shape == (6, 0)

    def test_ordered_euler_characteristic(self, k5):
        unordered = self.builder.build(k5, 2, UNORDERED)
        ordered = self.builder.build(k5, 2, ORDERED)
        assert unordered.cell_counts == [10, 30, 15]
        assert ordered.cell_counts == [20, 60, 30]
        assert euler_characteristic(ordered) == math.factorial(2) * euler_characteristic(unordered)

    def test_count_cells_matches_enumeration(self, star_graph):
        graph = subdivide_for(star_graph(3), 3)
        for flavor in (UNORDERED, ORDERED):
            assert count_cells(graph, 3, flavor) == self.builder.build(graph, 3, flavor).cell_counts

    def test_count_cells_stops_at_limit(self, k5):
        counts = count_cells(k5, 2, limit=20)
        assert sum(counts) > 20
        assert len(counts) <= 2

    def test_insufficient_subdivision_refused(self, triangle):
        with pytest.raises(SubdivisionError, match="cycle has 3 edges"):
            self.builder.build(triangle, 3)

    def test_bad_arguments(self, y_graph):
        with pytest.raises(SubdivisionError):
            self.builder.build(y_graph, -1)
        with pytest.raises(ValueError):
            self.builder.build(y_graph, 2, "braided")

    def test_index_lookup(self, y_graph):
        complex_ = self.builder.build(y_graph, 2)
        cell = complex_.cells(1)[3]
        assert complex_.index_of(cell) == 3
        assert cell in complex_
        assert Cell.of([(1, 2), (3, 4)]) not in complex_
        with pytest.raises(KeyError):
            complex_.index_of(Cell.of([(2, 3)]))

    def test_matchings(self):
        edges = [(1, 2), (1, 3), (2, 4), (3, 4)]
        assert list(iter_matchings(edges, 2)) == [((1, 2), (3, 4)), ((1, 3), (2, 4))]


class TestInvariants:
    """Test components, surfaces and disjoint unions"""

    def test_components_of_two_paths(self, two_paths):
        assert connected_components(build_complex(two_paths, 2)) == 3
        assert connected_components(build_complex(two_paths, 2, ORDERED)) == 6

    def test_disjoint_union_count_agrees(self, two_paths):
        assert disjoint_union_component_count(two_paths, 2) == 3
        assert disjoint_union_component_count(two_paths, 2, ORDERED) == 6

    def test_k5_spaces_are_closed_surfaces(self, k5):
        assert is_closed_surface(build_complex(k5, 2))
        assert is_closed_surface(build_complex(k5, 2, ORDERED))

    def test_star_space_is_not_a_surface(self, y_graph):
        assert not is_closed_surface(build_complex(y_graph, 2))


class TestDump:
    """Test JSON dumps"""

    def test_dump_complex(self, y_graph):
        dump = dump_complex(build_complex(y_graph, 2))
        assert dump["particles"] == 2
        assert dump["flavor"] == UNORDERED
        assert dump["numbering"] == ["h", "a1", "a2", "a3"]
        assert dump["cell_counts"] == [6, 6]
        assert dump["cells"][0][0] == ["h", "a1"]
        boundary, = dump["boundaries"]
        assert (boundary["rows"], boundary["cols"]) == (6, 6)
        assert len(boundary["triplets"]) == 12
        assert boundary["triplets"] == sorted(boundary["triplets"], key=lambda t: (t[1], t[0]))

    def test_dump_chain(self, y_graph):
        complex_ = build_complex(y_graph, 2)
        chain = Chain(1, {complex_.cells(1)[2]: -1, complex_.cells(1)[0]: 1})
        dump = dump_chain(chain, complex_)
        assert dump["dimension"] == 1
        assert [t["index"] for t in dump["terms"]] == [0, 2]
        assert dump["terms"][1]["coefficient"] == -1
