#!/usr/bin/env python3
"""
Unit tests for the graph file parser
"""

import pytest

from graph_confspace.core.error_handler import ErrorHandler, GraphParsingError
from graph_confspace.parsers.graph_parser import GraphParser, canonical_text, fingerprint, parse_graph


class TestParseGraph:
    """Test the directive format"""

    def test_edges_and_default_root(self):
        graph = parse_graph("edge h a\nedge h b\nedge h c\n")
        assert graph.vertices == ("h", "a", "b", "c")
        assert graph.root == "h"
        assert graph.neighbors("h") == ("a", "b", "c")

    def test_explicit_root_and_comments(self):
        text = """
        # a path
        root b
        edge a b   # first edge
        edge b c
        """
        graph = parse_graph(text)
        assert graph.root == "b"
        assert len(graph.edges) == 2

    def test_disjoint_directive(self):
        graph = parse_graph("edge a b\nedge x y\ndisjoint\n")
        assert graph.disjoint_union

    def test_disconnected_without_directive(self):
        with pytest.raises(GraphParsingError, match="disconnected"):
            parse_graph("edge a b\nedge x y\n")

    @pytest.mark.parametrize("text, message", [
        ("edge a a\n", "self-loop"),
        ("edge a b\nedge b a\n", "duplicate edge"),
        ("edge a\n", "two vertices"),
        ("vertex a\n", "unknown directive"),
        ("# nothing\n", "no edges"),
        ("root z\nedge a b\n", "not a vertex"),
        ("root a\nroot b\nedge a b\n", "root given twice"),
    ])
    def test_format_violations(self, text, message):
        with pytest.raises(GraphParsingError, match=message):
            parse_graph(text, source="bad.graph")

    def test_error_carries_line_number(self):
        with pytest.raises(GraphParsingError) as info:
            parse_graph("edge a b\n\nedge c c\n", source="bad.graph")
        assert info.value.context.line_number == 3
        assert info.value.context.file_path == "bad.graph"


class TestFingerprint:
    """Test canonical text and fingerprints"""

    def test_comments_and_whitespace_ignored(self):
        plain = "root h\nedge h a\nedge h b\n"
        noisy = "# header\n  root   h\n\nedge h a   # arm\nedge  h b\n"
        assert canonical_text(noisy) == plain
        assert fingerprint(noisy) == fingerprint(plain)

    def test_edge_order_matters(self):
        assert fingerprint("edge h a\nedge h b\n") != fingerprint("edge h b\nedge h a\n")

    def test_fingerprint_is_sha256_hex(self):
        value = fingerprint("edge a b\n")
        assert len(value) == 64
        int(value, 16)


class TestGraphParser:
    """Test GraphParser"""

    def setup_method(self):
        self.error_handler = ErrorHandler(log_errors=False)
        self.parser = GraphParser(error_handler=self.error_handler)

    def test_parse_file(self, y_graph_file):
        result = self.parser.parse_file(str(y_graph_file))
        assert result.success
        assert result.graph.root == "h"
        assert result.fingerprint == fingerprint(y_graph_file.read_text())
        assert result.warnings == []

    def test_parse_missing_file(self, tmp_path):
        result = self.parser.parse_file(str(tmp_path / "missing.graph"))
        assert not result.success
        assert "does not exist" in result.errors[0]
        assert self.error_handler.error_count == 1

    def test_parse_invalid_file(self, tmp_path):
        path = tmp_path / "bad.graph"
        path.write_text("edge a a\n")
        result = self.parser.parse_file(str(path))
        assert not result.success
        assert self.error_handler.error_reports[-1].error_type == "GraphParsingError"

    def test_disjoint_warning(self, tmp_path):
        path = tmp_path / "two.graph"
        path.write_text("edge a b\nedge x y\ndisjoint\n")
        result = self.parser.parse_file(str(path))
        assert result.success
        assert result.warnings
