#!/usr/bin/env python3
"""
Cycle Library - explicit cycle representatives in D_n

O-cycles move one particle around a cycle of the graph, Y-cycles exchange
two particles on a three-armed star, and tensor products of cycles with
disjoint supports give higher-dimensional tori. Chains are keyed by cells,
so factors living in different particle counts over the same numbered
graph compose directly.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..complexes.builder import ChainComplex
from ..complexes.cells import Cell, Chain
from ..core.error_handler import CycleConstructionError
from ..core.logger import LoggerMixin
from ..graphs.graph import Graph, VertexNumbering
from ..homology.smith import matrix_rank
from ..homology.sparse import SparseIntMatrix


@dataclass(frozen=True)
class CycleSpec:
    """How a chain was assembled; supports and spectators are vertex ranks"""
    kind: str  # "O", "Y" or "product"
    support: Tuple[int, ...]
    spectator_vertices: Tuple[int, ...] = ()
    factors: Tuple["CycleSpec", ...] = ()

    @property
    def min_vertex(self) -> int:
        return min(self.support) if self.support else 0


def _require_unordered(complex_: ChainComplex, operation: str) -> None:
    if complex_.ordered:
        raise CycleConstructionError(
            "Cycle construction supports unordered complexes only", operation=operation
        )


def _spectator_ranks(spectators: Sequence[str], numbering: VertexNumbering, operation: str) -> Tuple[int, ...]:
    try:
        ranks = tuple(sorted(numbering[v] for v in spectators))
    except KeyError as e:
        raise CycleConstructionError(f"Spectator {e.args[0]} is not a vertex", operation=operation) from None
    if len(set(ranks)) != len(ranks):
        raise CycleConstructionError("Spectator vertices repeat", operation=operation)
    return ranks


def _walk_chain(walk: Sequence[int], spectators: Tuple[int, ...]) -> Dict[Cell, int]:
    """1-chain moving one particle along a closed walk of ranks; +1 when stepping up in rank"""
    terms: Dict[Cell, int] = {}
    for a, b in zip(walk, walk[1:]):
        tau, iota = (a, b) if a < b else (b, a)
        cell = Cell.of(spectators + ((tau, iota),))
        terms[cell] = terms.get(cell, 0) + (1 if b == iota else -1)
    return terms


def _check_membership(chain: Chain, complex_: ChainComplex, operation: str) -> None:
    for cell in chain.terms:
        if cell not in complex_:
            raise CycleConstructionError(
                f"Cell {cell.describe(complex_.numbering)} is not in the complex "
                f"(n={complex_.particles}); check the spectator count",
                operation=operation
            )


def o_chain(graph: Graph, numbering: VertexNumbering, cycle_edges: Sequence[Tuple[str, str]],
            spectators: Sequence[str] = ()) -> Chain:
    """O-cycle without membership checks against a particular complex"""
    operation = "o_cycle"
    edges = [tuple(e) for e in cycle_edges]
    if len(edges) < 3:
        raise CycleConstructionError("A cycle needs at least 3 edges", operation=operation)
    for u, v in edges:
        if not graph.has_edge(u, v):
            raise CycleConstructionError(f"{u}-{v} is not an edge of the graph", operation=operation)

    first, second = set(edges[0]), set(edges[1])
    shared = first & second
    if len(shared) != 1:
        raise CycleConstructionError("Consecutive edges must share exactly one vertex", operation=operation)
    (start,) = first - shared
    walk = [start]
    current = start
    for u, v in edges:
        if current == u:
            current = v
        elif current == v:
            current = u
        else:
            raise CycleConstructionError(f"Edge {u}-{v} does not continue the walk at {current}", operation=operation)
        walk.append(current)
    if walk[-1] != walk[0]:
        raise CycleConstructionError("Edges do not form a closed walk", operation=operation)
    if len(set(walk[:-1])) != len(edges):
        raise CycleConstructionError("Closed walk is not a simple cycle", operation=operation)

    ranks = [numbering[v] for v in walk]
    specs = _spectator_ranks(spectators, numbering, operation)
    if set(specs) & set(ranks):
        raise CycleConstructionError("Spectators must be disjoint from the cycle", operation=operation)

    spec = CycleSpec(kind="O", support=tuple(sorted(set(ranks))), spectator_vertices=specs)
    return Chain(1, _walk_chain(ranks, specs), spec)


def o_cycle(cycle_edges: Sequence[Tuple[str, str]], spectators: Sequence[str], complex_: ChainComplex) -> Chain:
    """
    One particle travels once around a cycle while the spectators stay put

    Args:
        cycle_edges: Edges of the cycle in walking order
        spectators: Vertices holding the other n - 1 particles
        complex_: Unordered complex the chain lives in

    Returns:
        1-cycle with +-1 coefficients
    """
    _require_unordered(complex_, "o_cycle")
    chain = o_chain(complex_.graph, complex_.numbering, cycle_edges, spectators)
    _check_membership(chain, complex_, "o_cycle")
    return chain


def y_chain(graph: Graph, numbering: VertexNumbering, hub: str, arms: Sequence[str],
            spectators: Sequence[str] = ()) -> Chain:
    """Y-cycle without membership checks against a particular complex"""
    operation = "y_cycle"
    if hub not in graph.neighbor_order:
        raise CycleConstructionError(f"Hub {hub} is not a vertex", operation=operation)
    if graph.degree(hub) < 3:
        raise CycleConstructionError(f"Hub {hub} has degree {graph.degree(hub)}; a Y needs 3 arms", operation=operation)
    if len(arms) != 3 or len(set(arms)) != 3:
        raise CycleConstructionError("A Y-cycle needs three distinct arm vertices", operation=operation)
    for arm in arms:
        if not graph.has_edge(hub, arm):
            raise CycleConstructionError(f"Arm {arm} is not adjacent to hub {hub}", operation=operation)

    h = numbering[hub]
    x, y, z = sorted(numbering[a] for a in arms)
    specs = _spectator_ranks(spectators, numbering, operation)
    if set(specs) & {h, x, y, z}:
        raise CycleConstructionError("Spectators must be disjoint from the Y-subgraph", operation=operation)

    # particles at {x, y} exchange through the hub; each step moves one of them
    configurations = [(x, y), (y, h), (y, z), (h, z), (x, z), (x, h), (x, y)]
    terms: Dict[Cell, int] = {}
    for before, after in zip(configurations, configurations[1:]):
        (a,) = set(before) - set(after)
        (b,) = set(after) - set(before)
        (stay,) = set(before) & set(after)
        tau, iota = (a, b) if a < b else (b, a)
        cell = Cell.of(specs + (stay, (tau, iota)))
        terms[cell] = terms.get(cell, 0) + (1 if b == iota else -1)

    spec = CycleSpec(kind="Y", support=tuple(sorted((h, x, y, z))), spectator_vertices=specs)
    return Chain(1, terms, spec)


def y_cycle(hub: str, arms: Sequence[str], spectators: Sequence[str], complex_: ChainComplex) -> Chain:
    """
    Hexagonal exchange of two particles on the star hub + three arms

    Arms are ranked x < y < z by the vertex numbering; the particles start
    on x and y and trade places through the hub.

    Returns:
        Six-term 1-cycle, spectators appended to every cell
    """
    _require_unordered(complex_, "y_cycle")
    chain = y_chain(complex_.graph, complex_.numbering, hub, arms, spectators)
    _check_membership(chain, complex_, "y_cycle")
    return chain


def vertex_chain(vertices: Sequence[str], numbering: VertexNumbering) -> Chain:
    """0-chain of particles parked on the given vertices"""
    ranks = _spectator_ranks(vertices, numbering, "vertex_chain")
    return Chain(0, {Cell.of(ranks): 1}, CycleSpec(kind="point", support=(), spectator_vertices=ranks))


def shuffle_sign(first: Cell, second: Cell) -> int:
    """(-1)^(number of edge pairs (e, e') with e from first, e' from second and tau(e') < tau(e))"""
    inversions = sum(1 for e in first.edges() for f in second.edges() if f[0] < e[0])
    return -1 if inversions % 2 else 1


def _compose_specs(a: Optional[CycleSpec], b: Optional[CycleSpec]) -> Optional[CycleSpec]:
    if a is None or b is None:
        return None
    factors: List[CycleSpec] = []
    spectators: Set[int] = set(a.spectator_vertices) | set(b.spectator_vertices)
    for spec in (a, b):
        if spec.kind == "product":
            factors.extend(spec.factors)
        elif spec.kind != "point":
            factors.append(CycleSpec(spec.kind, spec.support))
    factors.sort(key=lambda f: f.min_vertex)
    support = tuple(sorted(set().union(*(f.support for f in factors)))) if factors else ()
    return CycleSpec(
        kind="product", support=support, spectator_vertices=tuple(sorted(spectators)), factors=tuple(factors)
    )


def tensor_product(c: Chain, c2: Chain, complex_: Optional[ChainComplex] = None) -> Chain:
    """
    Product of two chains with disjoint supports

    Each pair of cells merges into their union with coefficient
    a * b * shuffle_sign, which makes the product of two cycles a cycle.

    Args:
        c: First factor
        c2: Second factor
        complex_: When given, every product cell must belong to it

    Returns:
        Chain of dimension dim(c) + dim(c2)
    """
    if complex_ is not None:
        _require_unordered(complex_, "tensor_product")
    overlap = c.support_vertices() & c2.support_vertices()
    if overlap:
        raise CycleConstructionError(
            f"Chains share vertices {sorted(overlap)}; a tensor product needs disjoint supports",
            operation="tensor_product"
        )
    pairs = (
        (Cell.of(s.entities + t.entities), a * b * shuffle_sign(s, t))
        for s, a in c.terms.items()
        for t, b in c2.terms.items()
    )
    product = Chain.from_pairs(c.dimension + c2.dimension, pairs, _compose_specs(c.spec, c2.spec))
    if complex_ is not None:
        _check_membership(product, complex_, "tensor_product")
    return product


class CycleLibrary(LoggerMixin):
    """Builds over-complete families of cycles and checks what they span"""

    def __init__(self, spectator_limit: int = 20_000):
        self.spectator_limit = spectator_limit
        self.logger.info("Cycle Library initialized")

    def _y_families(self, tree: Graph, numbering: VertexNumbering, m: int) -> Iterator[List[Chain]]:
        """m pairwise disjoint spectator-free Y-cycles, sorted by minimal support vertex"""
        hubs = sorted((v for v in tree.vertices if tree.degree(v) >= 3), key=lambda v: numbering[v])
        for hub_set in itertools.combinations(hubs, m):
            triples = [
                list(itertools.combinations(sorted(tree.neighbors(h), key=lambda v: numbering[v]), 3))
                for h in hub_set
            ]
            for choice in itertools.product(*triples):
                supports = [{h, *arms} for h, arms in zip(hub_set, choice)]
                if sum(len(s) for s in supports) != len(set().union(*supports)):
                    continue
                family = [y_chain(tree, numbering, h, arms) for h, arms in zip(hub_set, choice)]
                family.sort(key=lambda chain: chain.spec.min_vertex)
                yield family

    def tree_overcomplete_basis(self, tree: Graph, n: int, m: int, complex_: ChainComplex) -> List[Chain]:
        """
        Products of m disjoint Y-cycles with the remaining n - 2m particles
        parked anywhere outside their supports

        Enumeration order: hub subsets, then arm triples per hub, then
        spectator sets in lexicographic rank order. At most spectator_limit
        chains are returned.
        """
        _require_unordered(complex_, "tree_overcomplete_basis")
        if m < 1:
            raise CycleConstructionError(f"Homology order must be at least 1, got {m}",
                                         operation="tree_overcomplete_basis")
        if n < 2 * m:
            raise CycleConstructionError(
                f"{n} particles cannot carry {m} disjoint exchanges (need n >= {2 * m})",
                operation="tree_overcomplete_basis"
            )
        if not nx.is_tree(tree.to_networkx()):
            raise CycleConstructionError("Over-complete basis construction needs a tree",
                                         operation="tree_overcomplete_basis")
        if complex_.particles != n:
            raise CycleConstructionError(
                f"Complex has {complex_.particles} particles, expected {n}", operation="tree_overcomplete_basis"
            )

        numbering = complex_.numbering
        basis: List[Chain] = []
        for family in self._y_families(tree, numbering, m):
            product = family[0]
            for factor in family[1:]:
                product = tensor_product(product, factor)
            used = product.support_vertices()
            free = [numbering.vertex(r) for r in range(1, len(numbering) + 1) if r not in used]
            for parked in itertools.combinations(free, n - 2 * m):
                chain = tensor_product(product, vertex_chain(parked, numbering)) if parked else product
                basis.append(chain)
                if len(basis) >= self.spectator_limit:
                    self.logger.debug(f"Over-complete basis capped at {self.spectator_limit} chains")
                    return basis

        self.logger.debug(f"Over-complete basis for n={n}, m={m} has {len(basis)} chains")
        return basis

    def span_dimension(self, chains: Sequence[Chain], complex_: ChainComplex, dim: int) -> Tuple[int, int]:
        """
        Rational dimension of the image of the chains in H_dim, and betti_dim

        The span dimension is rank [d_(dim+1) | chains] - rank d_(dim+1),
        betti_dim = #cells - rank d_dim - rank d_(dim+1).
        """
        columns: List[Dict[int, int]] = []
        for chain in chains:
            if chain.dimension != dim:
                raise CycleConstructionError(
                    f"Chain of dimension {chain.dimension} given, expected {dim}", operation="spans_homology"
                )
            try:
                indexed = chain.indexed(complex_)
            except KeyError as e:
                raise CycleConstructionError(str(e.args[0]), operation="spans_homology") from e
            if not complex_.chain_boundary(chain).is_zero():
                raise CycleConstructionError("Input chain is not a cycle", operation="spans_homology")
            columns.append(indexed)

        cells = len(complex_.cells(dim))
        upper = complex_.boundary_matrix(dim + 1)
        lower_rank = matrix_rank(complex_.boundary_matrix(dim))
        upper_rank = matrix_rank(upper)
        betti = cells - lower_rank - upper_rank
        spanned = matrix_rank(upper.hstack(SparseIntMatrix.from_columns(cells, columns))) - upper_rank
        self.logger.debug(f"Chains span {spanned} of betti_{dim} = {betti}")
        return spanned, betti

    def spans_homology(self, chains: Sequence[Chain], complex_: ChainComplex, dim: int) -> bool:
        """True when the chains span H_dim over the rationals"""
        spanned, betti = self.span_dimension(chains, complex_, dim)
        return spanned == betti


def tree_overcomplete_basis(tree: Graph, n: int, m: int, complex_: ChainComplex,
                            spectator_limit: int = 20_000) -> List[Chain]:
    return CycleLibrary(spectator_limit).tree_overcomplete_basis(tree, n, m, complex_)


def spans_homology(chains: Sequence[Chain], complex_: ChainComplex, dim: int) -> bool:
    return CycleLibrary().spans_homology(chains, complex_, dim)
