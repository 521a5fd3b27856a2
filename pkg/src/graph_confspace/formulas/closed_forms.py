#!/usr/bin/env python3
"""
Closed-form Betti numbers of graph configuration spaces

Conventions: beta_1 with k in {0, 1} particles is 0 on trees, and beta_m
with fewer than 2m particles is 0 on trees. All arithmetic is exact
integer arithmetic.
"""

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple

from ..core.error_handler import FormulaArgumentError
from ..graphs.decomposition import TreeShape

EQ_STAR = "beta1-star-unordered"
EQ_STAR_ORDERED = "beta1-star-ordered"
EQ_TWO_PARTICLE = "beta2-two-particle"
EQ_TWO_PARTICLE_ORDERED = "beta2-two-particle-ordered"
EQ_TWO_PARTICLE_MULTI = "beta2-two-particle-multi"
EQ_TREE_PAIR = "beta2-tree-pair"
EQ_TREE_RECURSIVE = "betam-tree-recursive"
EQ_TREE_CLOSED = "betam-tree-closed"
EQ_TREE_GENERAL = "betam-tree-general"
EQ_SINGLE_EDGE = "beta2-single-edge"


@dataclass(frozen=True)
class FormulaValue:
    """One evaluated formula, as reported by the CLI"""
    variant: str
    value: int
    equation: str
    conjecture_conditional: bool = False


@dataclass(frozen=True)
class BettiTable:
    """First Betti numbers beta_1 of labelled graphs for several particle counts"""
    entries: Mapping[Tuple[str, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for (label, k), value in self.entries.items():
            if k < 0 or value < 0:
                raise FormulaArgumentError(
                    f"Betti table entry ({label}, {k}) = {value} must have k >= 0 and a non-negative value"
                )

    @classmethod
    def from_rows(cls, rows: Mapping[str, Sequence[int]]) -> "BettiTable":
        """Rows list beta_1 for k = 0, 1, 2, ..."""
        return cls({(label, k): int(v) for label, row in rows.items() for k, v in enumerate(row)})

    def get(self, label: str, k: int) -> int:
        try:
            return self.entries[(label, k)]
        except KeyError:
            raise FormulaArgumentError(f"Betti table has no entry for {label} with {k} particles") from None

    def row(self, label: str, n: int) -> List[int]:
        """[beta_1(label, k) for k = 0..n]"""
        return [self.get(label, k) for k in range(n + 1)]


def _check_degree(E: int, variant: str) -> None:
    if E < 3:
        raise FormulaArgumentError(f"Star hub degree must be at least 3, got {E}", variant=variant)


def _check_particles(n: int, variant: str) -> None:
    if n < 0:
        raise FormulaArgumentError(f"Particle count must be non-negative, got {n}", variant=variant)


def beta1_star(E: int, n: int) -> int:
    """beta_1 of D_n of a star with hub degree E"""
    _check_degree(E, "star")
    _check_particles(n, "star")
    if n < 2:
        return 0
    return math.comb(n + E - 2, E - 1) * (E - 2) - math.comb(n + E - 2, E - 2) + 1


def beta1_star_ordered(E: int, n: int) -> int:
    """beta_1 of the ordered configuration space of a star with hub degree E"""
    _check_degree(E, "star")
    _check_particles(n, "star")
    if n < 2:
        return 0
    return 1 + (n * E - 2 * n - E + 1) * math.factorial(n + E - 2) // math.factorial(E - 1)


def euler_consistent(E: int, n: int) -> bool:
    """1 - ordered beta_1 = n! (1 - unordered beta_1), both spaces being graphs up to homotopy"""
    return 1 - beta1_star_ordered(E, n) == math.factorial(n) * (1 - beta1_star(E, n))


def _check_component(b2: int, b1: int, mu: int, variant: str) -> None:
    if min(b2, b1, mu) < 0:
        raise FormulaArgumentError(f"Component data ({b2}, {b1}, {mu}) must be non-negative", variant=variant)
    if mu > b1:
        raise FormulaArgumentError(f"Trim loss {mu} exceeds component beta_1 {b1}", variant=variant)


def beta2_two_particle(b2_1: int, b2_2: int, b1_1: int, b1_2: int, mu_1: int, mu_2: int) -> int:
    """beta_2 of D_2 for a graph wedged from two components at a cut vertex"""
    _check_component(b2_1, b1_1, mu_1, "two-particle")
    _check_component(b2_2, b1_2, mu_2, "two-particle")
    return b2_1 + b2_2 + b1_1 * b1_2 - mu_1 * mu_2


def beta2_two_particle_ordered(b2_1: int, b2_2: int, b1_1: int, b1_2: int, mu_1: int, mu_2: int) -> int:
    """Ordered analogue: the pairwise term counts once per labelling"""
    _check_component(b2_1, b1_1, mu_1, "two-particle")
    _check_component(b2_2, b1_2, mu_2, "two-particle")
    return b2_1 + b2_2 + 2 * (b1_1 * b1_2 - mu_1 * mu_2)


def beta2_two_particle_multi(components: Sequence[Tuple[int, int, int]], ordered: bool = False) -> int:
    """
    beta_2 of D_2 for several components wedged at one cut vertex

    Args:
        components: (b2, b1, mu) per component
        ordered: Double the pairwise sum for the ordered space
    """
    if len(components) < 2:
        raise FormulaArgumentError(
            f"Multi-component formula needs at least 2 components, got {len(components)}",
            variant="two-particle-multi"
        )
    for b2, b1, mu in components:
        _check_component(b2, b1, mu, "two-particle-multi")
    pairwise = sum(
        a[1] * b[1] - a[2] * b[2] for a, b in itertools.combinations(components, 2)
    )
    return sum(c[0] for c in components) + (2 if ordered else 1) * pairwise


def beta2_tree_pair(E: int, E2: int, n: int) -> int:
    """beta_2 of D_n of a tree with two essential vertices of degrees E and E2"""
    _check_degree(E, "tree-pair")
    _check_degree(E2, "tree-pair")
    _check_particles(n, "tree-pair")
    return sum(
        (beta1_star(E, l) - beta1_star(E, l - 1)) * beta1_star(E2, n - l)
        for l in range(2, n - 1)
    )


def _recursive(degrees: Sequence[int], n: int) -> int:
    if len(degrees) == 1:
        return beta1_star(degrees[0], n)
    head, rest = degrees[0], degrees[1:]
    return sum(
        (beta1_star(head, l) - beta1_star(head, l - 1)) * _recursive(rest, n - l)
        for l in range(2, n - 1)
    )


def betam_tree_recursive(shape: TreeShape, n: int, m: int) -> int:
    """
    beta_m of D_n of a tree with exactly m essential vertices

    The first star of the peel order is split off and the rest is handled
    recursively.
    """
    _check_particles(n, "tree-recursive")
    if m < 1 or len(shape.stars) != m:
        raise FormulaArgumentError(
            f"Recursive tree formula needs exactly m stars, got {len(shape.stars)} stars for m={m}",
            variant="tree-recursive"
        )
    return _recursive([star.degree for star in shape.peel_order()], n)


def _composition_sums(degrees: Sequence[int], total: int) -> int:
    """Sum over l_1 + ... + l_m = total, l_j >= 2, of prod beta_1(S_j, l_j)"""
    # partial[s] accumulates the sum over compositions of s by the stars seen so far
    partial: Dict[int, int] = {0: 1}
    for E in degrees:
        step: Dict[int, int] = {}
        for s, acc in partial.items():
            for l in range(2, total - s + 1):
                step[s + l] = step.get(s + l, 0) + acc * beta1_star(E, l)
        partial = step
    return partial.get(total, 0)


def betam_tree_closed(stars: Sequence[int], n: int, m: int) -> int:
    """beta_m of D_n of a tree with exactly m essential vertices, from hub degrees alone"""
    _check_particles(n, "tree-closed")
    if m < 1 or len(stars) != m:
        raise FormulaArgumentError(
            f"Closed tree formula needs exactly m hub degrees, got {len(stars)} for m={m}",
            variant="tree-closed"
        )
    for E in stars:
        _check_degree(E, "tree-closed")
    return sum(
        (-1) ** i * math.comb(m - 1, i) * _composition_sums(stars, n - i)
        for i in range(m)
        if n - i >= 0
    )


def betam_tree_general(shape: TreeShape, n: int, m: int) -> int:
    """beta_m of D_n of any tree: the closed formula summed over m-subsets of its stars"""
    _check_particles(n, "tree-general")
    if m < 1:
        raise FormulaArgumentError(f"Homology order must be at least 1, got {m}", variant="tree-general")
    return sum(
        betam_tree_closed(subset, n, m)
        for subset in itertools.combinations(shape.degrees, m)
    )


def tree_beta1(shape: TreeShape, n: int) -> int:
    return sum(beta1_star(E, n) for E in shape.degrees)


def beta2_single_edge(
    b1_seq_1: Sequence[int],
    b1_seq_2: Sequence[int],
    b2_n_1: int,
    b2_n_2: int,
    n: int
) -> int:
    """
    beta_2 of D_n for two graphs joined through a single edge

    Holds provided the second homology of each side injects into that of
    the joined graph; callers report the value as conjecture-conditional.

    Args:
        b1_seq_1: beta_1 of the first side for k = 0..n
        b1_seq_2: beta_1 of the second side for k = 0..n
        b2_n_1: beta_2 of the first side with n particles
        b2_n_2: beta_2 of the second side with n particles
        n: Number of particles
    """
    _check_particles(n, "single-edge")
    for label, seq in (("first", b1_seq_1), ("second", b1_seq_2)):
        if len(seq) < n + 1:
            raise FormulaArgumentError(
                f"Betti sequence of the {label} side needs entries for k = 0..{n}, got {len(seq)}",
                variant="single-edge"
            )
        if any(v < 0 for v in seq):
            raise FormulaArgumentError(f"Betti sequence of the {label} side has negative entries", variant="single-edge")
    if b2_n_1 < 0 or b2_n_2 < 0:
        raise FormulaArgumentError("beta_2 values must be non-negative", variant="single-edge")

    def b1(seq: Sequence[int], k: int) -> int:
        return 0 if k == 0 else seq[k]

    return b2_n_2 + b2_n_1 + sum(
        (b1(b1_seq_1, k) - b1(b1_seq_1, k - 1)) * b1(b1_seq_2, n - k)
        for k in range(1, n + 1)
    )


def star_value(E: int, n: int, ordered: bool = False) -> FormulaValue:
    if ordered:
        return FormulaValue("star", beta1_star_ordered(E, n), EQ_STAR_ORDERED)
    return FormulaValue("star", beta1_star(E, n), EQ_STAR)


def evaluate_all_tree_forms(shape: TreeShape, n: int, m: int) -> List[FormulaValue]:
    """Every tree formula that applies to the shape at (n, m)"""
    values: List[FormulaValue] = []
    if m == 1 and len(shape.stars) == 1:
        values.append(star_value(shape.degrees[0], n))
    if m == 2 and len(shape.stars) == 2:
        values.append(FormulaValue("tree-pair", beta2_tree_pair(*shape.degrees, n), EQ_TREE_PAIR))
    if m >= 1 and len(shape.stars) == m:
        values.append(FormulaValue("tree-recursive", betam_tree_recursive(shape, n, m), EQ_TREE_RECURSIVE))
        values.append(FormulaValue("tree-closed", betam_tree_closed(shape.degrees, n, m), EQ_TREE_CLOSED))
    values.append(FormulaValue("tree-general", betam_tree_general(shape, n, m), EQ_TREE_GENERAL))
    return values
