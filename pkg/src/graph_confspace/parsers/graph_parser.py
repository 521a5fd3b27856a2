#!/usr/bin/env python3
"""
Graph Parser - reads the line-oriented graph file format

    # comment
    root <v>          optional, defaults to the first vertex mentioned
    edge <u> <v>      one per line; listing order is the neighbour order
    disjoint          optional, allows several connected components
"""

import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from ..core.error_handler import (
    ErrorHandler, ErrorSeverity, FileSystemError, GraphParsingError, GraphStructureError,
    create_error_context
)
from ..core.logger import LoggerMixin
from ..graphs.graph import Graph


@dataclass
class GraphParsingResult:
    """Result of parsing a graph file"""
    success: bool
    graph: Optional[Graph] = None
    fingerprint: Optional[str] = None
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)


@dataclass(frozen=True)
class _Directives:
    edges: Tuple[Tuple[str, str], ...]
    root: Optional[str]
    disjoint: bool


def _read_directives(text: str, source: Optional[str] = None) -> _Directives:
    edges: List[Tuple[str, str]] = []
    seen = set()
    root: Optional[str] = None
    disjoint = False

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        keyword = parts[0].lower()

        if keyword == "edge":
            if len(parts) != 3:
                raise GraphParsingError(
                    f"line {line_number}: 'edge' takes two vertices", file_path=source, line_number=line_number
                )
            u, v = parts[1], parts[2]
            if u == v:
                raise GraphParsingError(
                    f"line {line_number}: self-loop at {u}", file_path=source, line_number=line_number
                )
            key = frozenset((u, v))
            if key in seen:
                raise GraphParsingError(
                    f"line {line_number}: duplicate edge {u}-{v}", file_path=source, line_number=line_number
                )
            seen.add(key)
            edges.append((u, v))
        elif keyword == "root":
            if len(parts) != 2:
                raise GraphParsingError(
                    f"line {line_number}: 'root' takes one vertex", file_path=source, line_number=line_number
                )
            if root is not None:
                raise GraphParsingError(
                    f"line {line_number}: root given twice", file_path=source, line_number=line_number
                )
            root = parts[1]
        elif keyword == "disjoint":
            disjoint = True
        else:
            raise GraphParsingError(
                f"line {line_number}: unknown directive '{parts[0]}'", file_path=source, line_number=line_number
            )

    if not edges:
        raise GraphParsingError("graph file contains no edges", file_path=source)

    return _Directives(edges=tuple(edges), root=root, disjoint=disjoint)


def canonical_text(text: str) -> str:
    """Comment- and whitespace-free rendering used for fingerprints"""
    directives = _read_directives(text)
    lines = []
    if directives.root is not None:
        lines.append(f"root {directives.root}")
    lines.extend(f"edge {u} {v}" for u, v in directives.edges)
    if directives.disjoint:
        lines.append("disjoint")
    return "\n".join(lines) + "\n"


def fingerprint(text: str) -> str:
    """SHA-256 of the canonical graph text"""
    return hashlib.sha256(canonical_text(text).encode("utf-8")).hexdigest()


def parse_graph(text: str, source: Optional[str] = None) -> Graph:
    """
    Parse graph file contents

    Args:
        text: File contents
        source: File name used in error messages

    Returns:
        Graph with neighbour order equal to first appearance in the file
    """
    directives = _read_directives(text, source)
    mentioned = {w for edge in directives.edges for w in edge}
    if directives.root is not None and directives.root not in mentioned:
        raise GraphParsingError(f"root {directives.root} is not a vertex of any edge", file_path=source)

    try:
        return Graph.from_edges(directives.edges, root=directives.root, disjoint_union=directives.disjoint)
    except GraphStructureError as e:
        raise GraphParsingError(str(e), file_path=source) from e


class GraphParser(LoggerMixin):
    """Parser for graph files"""

    def __init__(self, error_handler: Optional[ErrorHandler] = None):
        self.error_handler = error_handler or ErrorHandler()
        self.logger.info("Graph Parser initialized")

    def parse_text(self, text: str, source: Optional[str] = None) -> Graph:
        graph = parse_graph(text, source)
        self.logger.debug(
            f"Parsed graph with {len(graph.vertices)} vertices and {len(graph.edges)} edges, root {graph.root}"
        )
        return graph

    def parse_file(self, file_path: str) -> GraphParsingResult:
        """
        Parse a graph file, reporting failures through the error handler

        Args:
            file_path: Path to the graph file

        Returns:
            GraphParsingResult
        """
        self.logger.info(f"Parsing graph file: {file_path}")
        path = Path(file_path)

        if not path.exists():
            error = FileSystemError(
                f"File does not exist: {path}",
                severity=ErrorSeverity.HIGH,
                file_path=str(path)
            )
            self.error_handler.handle_error(
                error,
                context=create_error_context(file_path=str(path), component="GraphParser", operation="parse_file")
            )
            return GraphParsingResult(False, errors=[str(error)])

        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            error = FileSystemError(f"Cannot read {path}: {e}", file_path=str(path))
            self.error_handler.handle_error(error)
            return GraphParsingResult(False, errors=[str(error)])

        try:
            graph = self.parse_text(text, source=str(path))
        except GraphParsingError as e:
            self.error_handler.handle_error(e)
            return GraphParsingResult(False, errors=[str(e)])

        result = GraphParsingResult(True, graph=graph, fingerprint=fingerprint(text))
        if graph.disjoint_union:
            result.warnings.append("graph is flagged as a disjoint union")
        return result
