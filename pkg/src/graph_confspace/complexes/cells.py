#!/usr/bin/env python3
"""
Cells and chains of discrete configuration spaces

A cell is a collection of pairwise disjoint entities of the graph: k edges
and n - k vertices. Entities address vertices by their rank under the
complex's vertex numbering, so a vertex is an int and an edge is the pair
(tau, iota) with tau < iota.
"""

import bisect
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Set, Tuple, Union

from ..graphs.graph import VertexNumbering

Entity = Union[int, Tuple[int, int]]

UNORDERED = "unordered"
ORDERED = "ordered"
FLAVORS = (UNORDERED, ORDERED)


def entity_key(entity: Entity) -> Tuple[int, int, int]:
    """Sort key placing vertices before edges, each ascending"""
    if isinstance(entity, tuple):
        return (1, entity[0], entity[1])
    return (0, entity, 0)


def entity_vertices(entity: Entity) -> Tuple[int, ...]:
    return entity if isinstance(entity, tuple) else (entity,)


@dataclass(frozen=True, slots=True)
class Cell:
    """One cube of D_n (unordered) or of the ordered space (tuple in particle order)"""
    entities: Tuple[Entity, ...]
    ordered: bool = False

    @classmethod
    def of(cls, entities: Iterable[Entity], ordered: bool = False) -> "Cell":
        """Build a cell, putting unordered cells into canonical sorted form"""
        items = tuple(entities)
        if not ordered:
            items = tuple(sorted(items, key=entity_key))
        return cls(items, ordered)

    @classmethod
    def named(cls, items: Iterable[Any], numbering: VertexNumbering, ordered: bool = False) -> "Cell":
        """Build a cell from vertex names ("v") and edges given as name pairs"""
        entities: List[Entity] = []
        for item in items:
            if isinstance(item, str):
                entities.append(numbering[item])
            else:
                u, w = item
                entities.append(numbering.oriented(u, w))
        return cls.of(entities, ordered)

    @property
    def dimension(self) -> int:
        return sum(1 for e in self.entities if isinstance(e, tuple))

    @property
    def flavor(self) -> str:
        return ORDERED if self.ordered else UNORDERED

    def edges(self) -> List[Tuple[int, int]]:
        return [e for e in self.entities if isinstance(e, tuple)]

    def vertices(self) -> List[int]:
        return [e for e in self.entities if not isinstance(e, tuple)]

    def touched(self) -> Set[int]:
        """All graph vertices occupied or traversed by the cell"""
        out: Set[int] = set()
        for e in self.entities:
            out.update(entity_vertices(e))
        return out

    def is_valid(self) -> bool:
        """Entities pairwise disjoint as subsets of the graph"""
        count = sum(len(entity_vertices(e)) for e in self.entities)
        return count == len(self.touched())

    def describe(self, numbering: VertexNumbering) -> List[Any]:
        """Entities rendered with vertex names: "v" or ["u", "w"]"""
        rendered: List[Any] = []
        for e in self.entities:
            if isinstance(e, tuple):
                rendered.append([numbering.vertex(e[0]), numbering.vertex(e[1])])
            else:
                rendered.append(numbering.vertex(e))
        return rendered


def faces(cell: Cell) -> List[Tuple[Cell, int]]:
    """
    Signed codimension-one faces of a cell

    Edges are ranked by increasing tau. The edge of rank i contributes its
    iota face with sign (-1)^i and its tau face with sign -(-1)^i. In the
    ordered flavor the replacing vertex keeps the edge's tuple position.
    """
    if cell.ordered:
        positions = sorted(
            (i for i, e in enumerate(cell.entities) if isinstance(e, tuple)),
            key=lambda i: cell.entities[i][0]
        )
        out: List[Tuple[Cell, int]] = []
        for rank, pos in enumerate(positions):
            sign = -1 if rank % 2 else 1
            tau, iota = cell.entities[pos]
            head = cell.entities[:pos]
            tail = cell.entities[pos + 1:]
            out.append((Cell(head + (iota,) + tail, True), sign))
            out.append((Cell(head + (tau,) + tail, True), -sign))
        return out

    vertices = [e for e in cell.entities if not isinstance(e, tuple)]
    edges = [e for e in cell.entities if isinstance(e, tuple)]
    out = []
    for rank, (tau, iota) in enumerate(edges):
        sign = -1 if rank % 2 else 1
        rest = tuple(edges[:rank] + edges[rank + 1:])
        for endpoint, coefficient in ((iota, sign), (tau, -sign)):
            vs = list(vertices)
            bisect.insort(vs, endpoint)
            out.append((Cell(tuple(vs) + rest, False), coefficient))
    return out


@dataclass(frozen=True)
class Chain:
    """Finite integer combination of cells of one dimension"""
    dimension: int
    terms: Mapping[Cell, int] = field(default_factory=dict)
    spec: Optional[Any] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        cleaned = {cell: int(c) for cell, c in self.terms.items() if c != 0}
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def zero(cls, dimension: int) -> "Chain":
        return cls(dimension, {})

    @classmethod
    def from_pairs(cls, dimension: int, pairs: Iterable[Tuple[Cell, int]], spec: Optional[Any] = None) -> "Chain":
        """Accumulate (cell, coefficient) pairs, adding repeated cells"""
        terms: Dict[Cell, int] = {}
        for cell, coefficient in pairs:
            terms[cell] = terms.get(cell, 0) + coefficient
        return cls(dimension, terms, spec)

    def __add__(self, other: "Chain") -> "Chain":
        if other.dimension != self.dimension and other.terms and self.terms:
            raise ValueError(f"Cannot add chains of dimensions {self.dimension} and {other.dimension}")
        return Chain.from_pairs(self.dimension, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "Chain":
        return self.scaled(-1)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scaled(self, factor: int) -> "Chain":
        return Chain(self.dimension, {cell: factor * c for cell, c in self.terms.items()}, self.spec)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def support_vertices(self) -> Set[int]:
        out: Set[int] = set()
        for cell in self.terms:
            out |= cell.touched()
        return out

    def boundary(self) -> "Chain":
        """Boundary computed cell by cell from the face rule"""
        if self.dimension == 0:
            return Chain.zero(0)
        return Chain.from_pairs(
            self.dimension - 1,
            ((face, c * sign) for cell, c in self.terms.items() for face, sign in faces(cell))
        )

    def indexed(self, complex_: Any) -> Dict[int, int]:
        """Coefficients keyed by cell index in the given complex"""
        return {complex_.index_of(cell): c for cell, c in self.terms.items()}
