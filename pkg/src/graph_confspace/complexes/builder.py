#!/usr/bin/env python3
"""
Complex Builder - enumerates the cells of D_n(G) and its ordered cover
and assembles the boundary matrices
"""

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..core.error_handler import GraphStructureError, SubdivisionError
from ..core.logger import LoggerMixin, log_duration
from ..graphs.graph import Graph, VertexNumbering, default_numbering
from ..graphs.subdivision import sufficiency_violations
from ..homology.sparse import SparseIntMatrix
from .cells import FLAVORS, ORDERED, UNORDERED, Cell, Chain, faces

RankEdge = Tuple[int, int]


@dataclass(frozen=True)
class ChainComplex:
    """
    Cubical chain complex of a discrete configuration space

    boundaries[k] maps k-cells to (k-1)-cells; boundaries[0] is the empty
    map out of the 0-cells.
    """
    graph: Graph
    numbering: VertexNumbering
    particles: int
    flavor: str
    cells_by_dim: Tuple[Tuple[Cell, ...], ...]
    boundaries: Tuple[SparseIntMatrix, ...]
    _index: Tuple[Mapping[Cell, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_index", tuple({cell: i for i, cell in enumerate(cells)} for cells in self.cells_by_dim)
        )

    @property
    def top_dimension(self) -> int:
        return len(self.cells_by_dim) - 1

    @property
    def cell_counts(self) -> List[int]:
        return [len(cells) for cells in self.cells_by_dim]

    @property
    def ordered(self) -> bool:
        return self.flavor == ORDERED

    def cells(self, k: int) -> Tuple[Cell, ...]:
        if 0 <= k < len(self.cells_by_dim):
            return self.cells_by_dim[k]
        return ()

    def index_of(self, cell: Cell) -> int:
        try:
            return self._index[cell.dimension][cell]
        except (IndexError, KeyError):
            raise KeyError(f"Cell {cell.entities} is not in the complex") from None

    def __contains__(self, cell: Cell) -> bool:
        k = cell.dimension
        return k < len(self._index) and cell in self._index[k]

    def boundary_matrix(self, k: int) -> SparseIntMatrix:
        """Matrix of the boundary from k-cells to (k-1)-cells; empty outside 1..top"""
        if 1 <= k <= self.top_dimension:
            return self.boundaries[k]
        return SparseIntMatrix.zeros(len(self.cells(k - 1)), len(self.cells(k)))

    def chain_boundary(self, chain: Chain) -> Chain:
        for cell in chain.terms:
            if cell not in self:
                raise KeyError(f"Cell {cell.entities} is not in the complex")
        return chain.boundary()


def boundary_of(cell: Cell, numbering: Optional[VertexNumbering] = None) -> Chain:
    """
    Signed boundary of a cell

    Args:
        cell: Cell whose entities are ranks under the numbering
        numbering: Numbering the ranks refer to, used to validate them

    Returns:
        Chain of dimension one lower; the zero chain for 0-cells
    """
    if numbering is not None:
        touched = cell.touched()
        if touched and (min(touched) < 1 or max(touched) > len(numbering)):
            raise GraphStructureError(
                f"Cell {cell.entities} uses ranks outside 1..{len(numbering)}", operation="boundary_of"
            )
    if cell.dimension == 0:
        return Chain.zero(0)
    return Chain.from_pairs(cell.dimension - 1, faces(cell))


def ranked_edges(graph: Graph, numbering: VertexNumbering) -> List[RankEdge]:
    return sorted(numbering.oriented(u, v) for u, v in graph.edges)


def iter_matchings(edges: Sequence[RankEdge], size: int) -> Iterator[Tuple[RankEdge, ...]]:
    """Sets of pairwise disjoint edges, each yielded in increasing edge order"""
    chosen: List[RankEdge] = []
    used = set()

    def extend(start: int) -> Iterator[Tuple[RankEdge, ...]]:
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for i in range(start, len(edges) - (size - len(chosen)) + 1):
            tau, iota = edges[i]
            if tau in used or iota in used:
                continue
            chosen.append(edges[i])
            used.update((tau, iota))
            yield from extend(i + 1)
            chosen.pop()
            used.difference_update((tau, iota))

    yield from extend(0)


def iter_cells(vertex_count: int, edges: Sequence[RankEdge], n: int, k: int, ordered: bool) -> Iterator[Cell]:
    """Cells with k edges and n - k vertices; ordered cells in all n! labelings"""
    ranks = range(1, vertex_count + 1)
    for matching in iter_matchings(edges, k):
        used = {w for e in matching for w in e}
        free = [v for v in ranks if v not in used]
        for vertices in itertools.combinations(free, n - k):
            entities = vertices + matching
            if ordered:
                for labeling in itertools.permutations(entities):
                    yield Cell(labeling, True)
            else:
                yield Cell(entities, False)


def count_cells(
    graph: Graph,
    n: int,
    flavor: str = UNORDERED,
    numbering: Optional[VertexNumbering] = None,
    limit: Optional[int] = None
) -> List[int]:
    """
    Per-dimension cell counts without materialising the cells

    A k-cell is a k-matching together with n - k of the remaining vertices,
    so each matching contributes C(|V| - 2k, n - k) cells, times n! when
    ordered. Trailing empty dimensions are dropped, dimension 0 is kept.

    Args:
        limit: Stop counting once the running total exceeds this value; the
            partial counts returned then sum to more than the limit
    """
    _check_flavor(flavor)
    numbering = numbering or default_numbering(graph)
    edges = ranked_edges(graph, numbering)
    vertex_count = len(graph.vertices)
    factor = math.factorial(n) if flavor == ORDERED else 1

    counts: List[int] = []
    total = 0
    for k in range(0, n + 1):
        per_matching = math.comb(vertex_count - 2 * k, n - k) * factor if vertex_count >= 2 * k else 0
        count = 0
        if per_matching:
            for _ in iter_matchings(edges, k):
                count += per_matching
                if limit is not None and total + count > limit:
                    counts.append(count)
                    return counts
        counts.append(count)
        total += count

    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def _check_flavor(flavor: str) -> None:
    if flavor not in FLAVORS:
        raise ValueError(f"Unknown flavor '{flavor}', expected one of {FLAVORS}")


class ComplexBuilder(LoggerMixin):
    """Builds ChainComplex instances for graphs and particle counts"""

    def __init__(self):
        self.logger.info("Complex Builder initialized")

    def build(
        self,
        graph: Graph,
        n: int,
        flavor: str = UNORDERED,
        numbering: Optional[VertexNumbering] = None
    ) -> ChainComplex:
        """
        Enumerate every cell of the configuration space and its boundaries

        Args:
            graph: Sufficiently subdivided graph
            n: Number of particles
            flavor: "unordered" for D_n, "ordered" for its n!-sheeted cover
            numbering: Vertex numbering; the canonical DFS numbering by default

        Returns:
            ChainComplex
        """
        _check_flavor(flavor)
        if n < 0:
            raise SubdivisionError(f"Particle count must be non-negative, got {n}", particles=n)
        violations = sufficiency_violations(graph, n)
        if violations:
            details = "; ".join(v.describe() for v in violations)
            raise SubdivisionError(
                f"Graph is not sufficiently subdivided for {n} particles: {details}", particles=n
            )

        numbering = numbering or default_numbering(graph)
        edges = ranked_edges(graph, numbering)
        ordered = flavor == ORDERED

        with log_duration(self.logger, f"Building {flavor} complex for n={n}") as timing:
            cells_by_dim: List[Tuple[Cell, ...]] = []
            for k in range(0, n + 1):
                cells = tuple(iter_cells(len(graph.vertices), edges, n, k, ordered))
                if k > 0 and not cells:
                    break
                cells_by_dim.append(cells)
                self.logger.debug(f"Enumerated {len(cells)} cells in dimension {k}")

            boundaries: List[SparseIntMatrix] = [SparseIntMatrix.zeros(0, len(cells_by_dim[0]))]
            for k in range(1, len(cells_by_dim)):
                index: Dict[Cell, int] = {cell: i for i, cell in enumerate(cells_by_dim[k - 1])}
                columns = []
                for cell in cells_by_dim[k]:
                    column: Dict[int, int] = {}
                    for face, sign in faces(cell):
                        row = index[face]
                        column[row] = column.get(row, 0) + sign
                    columns.append(column)
                boundaries.append(SparseIntMatrix.from_columns(len(cells_by_dim[k - 1]), columns))

        self.logger.debug(
            f"Complex cell counts {[len(c) for c in cells_by_dim]} built in {timing['seconds']:.3f}s"
        )
        return ChainComplex(
            graph=graph,
            numbering=numbering,
            particles=n,
            flavor=flavor,
            cells_by_dim=tuple(cells_by_dim),
            boundaries=tuple(boundaries),
        )


def build_complex(
    graph: Graph,
    n: int,
    flavor: str = UNORDERED,
    numbering: Optional[VertexNumbering] = None
) -> ChainComplex:
    """Build D_n(graph) (unordered) or its ordered cover; see ComplexBuilder.build"""
    return ComplexBuilder().build(graph, n, flavor, numbering)
