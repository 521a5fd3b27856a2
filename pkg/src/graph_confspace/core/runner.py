#!/usr/bin/env python3
"""
Job Runner - executes homology, formula, verification and dump jobs and
collects their results into JobReport records
"""

import json
import time
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple

import psutil
from pydantic import BaseModel, Field, model_validator

from ..complexes.builder import build_complex, count_cells
from ..complexes.cells import ORDERED, UNORDERED
from ..complexes.dump import dump_complex
from ..complexes.invariants import euler_characteristic
from ..cycles.cycle_library import CycleLibrary
from ..formulas.closed_forms import (
    EQ_SINGLE_EDGE, EQ_TREE_CLOSED, EQ_TREE_GENERAL, EQ_TREE_PAIR, EQ_TREE_RECURSIVE, EQ_TWO_PARTICLE,
    EQ_TWO_PARTICLE_MULTI, EQ_TWO_PARTICLE_ORDERED, FormulaValue, beta2_single_edge, beta2_tree_pair,
    beta2_two_particle, beta2_two_particle_multi, beta2_two_particle_ordered, betam_tree_closed,
    betam_tree_general, betam_tree_recursive, star_value
)
from ..graphs.decomposition import TreeShape, tree_from_shape, tree_shape
from ..graphs.graph import Graph
from ..graphs.subdivision import subdivide_for
from ..homology.homology import homology
from ..parsers.graph_parser import GraphParser, fingerprint
from ..validators.theorem_verifier import MISMATCH, TheoremVerifier
from .config import Config
from .error_handler import (
    BudgetExceededError, ErrorHandler, FileSystemError, FormulaArgumentError
)
from .logger import LoggerMixin

FORMULA_VARIANTS = (
    "star", "two-particle", "two-particle-multi", "tree-pair", "tree-recursive", "tree-closed",
    "tree-general", "single-edge",
)


class FormulaRecord(BaseModel):
    variant: str
    equation: str
    value: int
    conjecture_conditional: bool = False


class CheckRecord(BaseModel):
    n: int
    m: int
    flavor: str
    equation: str
    formula_value: Optional[int] = None
    oracle_value: Optional[int] = None
    verdict: Literal["match", "mismatch", "conjecture-conditional-match"]

    @model_validator(mode="after")
    def mismatch_has_both_values(self) -> "CheckRecord":
        if self.verdict == MISMATCH and (self.formula_value is None or self.oracle_value is None):
            raise ValueError("A mismatch must report both the formula and the homology value")
        return self


class JobReport(BaseModel):
    """Result of one CLI job; field order is the JSON field order"""
    command: str
    graph_fingerprint: Optional[str] = None
    particles: Optional[int] = None
    flavor: Optional[str] = None
    subdivided_vertices: Optional[int] = None
    subdivided_edges: Optional[int] = None
    cell_counts: List[int] = Field(default_factory=list)
    betti: List[int] = Field(default_factory=list)
    torsion: Optional[List[List[int]]] = Field(default_factory=list, description="None when only ranks were computed")
    euler_characteristic: Optional[int] = None
    wall_time_seconds: Optional[float] = None
    formulas: List[FormulaRecord] = Field(default_factory=list)
    checks: List[CheckRecord] = Field(default_factory=list)

    @property
    def has_mismatch(self) -> bool:
        return any(check.verdict == MISMATCH for check in self.checks)

    def to_json(self, include_timings: bool = False, indent: int = 2) -> str:
        exclude = None if include_timings else {"wall_time_seconds"}
        return json.dumps(self.model_dump(exclude=exclude), indent=indent) + "\n"


def parse_range(text: str) -> List[int]:
    """"4" -> [4], "2..5" -> [2, 3, 4, 5]"""
    try:
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
        else:
            low = high = int(text)
    except ValueError:
        raise FormulaArgumentError(f"Invalid range '{text}', expected N or A..B") from None
    if low < 0 or high < low:
        raise FormulaArgumentError(f"Invalid range '{text}'")
    return list(range(low, high + 1))


class JobRunner(LoggerMixin):
    """Runs CLI jobs against a configuration"""

    def __init__(self, config: Optional[Config] = None, error_handler: Optional[ErrorHandler] = None):
        self.config = config or Config()
        self.error_handler = error_handler or ErrorHandler()
        self.parser = GraphParser(error_handler=self.error_handler)
        self.logger.info("Job Runner initialized")

    def load_graph(self, graph_file: str) -> Tuple[Graph, str]:
        """Parse a graph file; returns the graph and its fingerprint"""
        path = Path(graph_file)
        if not path.is_file():
            raise FileSystemError(f"Graph file does not exist: {path}", file_path=str(path))
        text = path.read_text(encoding="utf-8")
        return self.parser.parse_text(text, source=str(path)), fingerprint(text)

    def _budget(self, budget: Optional[int]) -> int:
        return budget if budget is not None else self.config.computation.cell_budget

    def _check_budget(self, graph: Graph, n: int, flavor: str, budget: int) -> None:
        total = sum(count_cells(graph, n, flavor, limit=budget))
        if total > budget:
            raise BudgetExceededError(
                f"Complex for n={n} ({flavor}) has more than {budget} cells; refusing to build it",
                particles=n, cells=total, budget=budget
            )

    def _log_memory(self, label: str) -> None:
        rss = psutil.Process().memory_info().rss / (1024 * 1024)
        self.logger.info(f"{label} finished, process RSS {rss:.1f} MB")

    def run_homology(
        self,
        graph_file: str,
        n: int,
        ordered: bool = False,
        max_dim: Optional[int] = None,
        bigint: bool = False,
        rank_only: bool = False,
        budget: Optional[int] = None
    ) -> JobReport:
        """Subdivide, build D_n (or its ordered cover), and compute its homology"""
        start = time.perf_counter()
        graph, digest = self.load_graph(graph_file)
        flavor = ORDERED if ordered else UNORDERED
        refined = subdivide_for(graph, n)
        self._check_budget(refined, n, flavor, self._budget(budget))

        complex_ = build_complex(refined, n, flavor)
        computation = self.config.computation
        result = homology(
            complex_,
            max_dim=max_dim,
            arithmetic="bigint" if bigint else computation.arithmetic,
            bound=computation.overflow_bound,
            torsion=not rank_only,
            parallel=computation.parallel_dimensions,
            max_workers=computation.max_workers,
        )
        self._log_memory("Homology job")

        return JobReport(
            command="homology",
            graph_fingerprint=digest,
            particles=n,
            flavor=flavor,
            subdivided_vertices=len(refined.vertices),
            subdivided_edges=len(refined.edges),
            cell_counts=complex_.cell_counts,
            betti=list(result.betti),
            torsion=[list(t) for t in result.torsion] if result.torsion_computed else None,
            euler_characteristic=euler_characteristic(complex_),
            wall_time_seconds=round(time.perf_counter() - start, 6),
        )

    def _shape(self, stars: Optional[Sequence[int]], graph_file: Optional[str]) -> Tuple[TreeShape, Optional[str]]:
        if graph_file:
            graph, digest = self.load_graph(graph_file)
            return tree_shape(graph), digest
        if not stars:
            raise FormulaArgumentError("Tree formulas need --stars or --graph")
        return TreeShape.from_degrees(stars), None

    def run_formula(
        self,
        variant: str,
        n: int,
        m: Optional[int] = None,
        stars: Optional[Sequence[int]] = None,
        graph_file: Optional[str] = None,
        components: Optional[Sequence[Tuple[int, int, int]]] = None,
        betti_rows: Optional[Sequence[Sequence[int]]] = None,
        b2: Optional[Sequence[int]] = None,
        ordered: bool = False
    ) -> JobReport:
        """Evaluate one closed-form formula"""
        start = time.perf_counter()
        digest: Optional[str] = None
        components = list(components or [])

        if variant == "star":
            if not stars or len(stars) != 1:
                raise FormulaArgumentError("The star formula needs exactly one hub degree", variant=variant)
            value = star_value(stars[0], n, ordered)
        elif variant == "two-particle":
            if len(components) != 2:
                raise FormulaArgumentError("The two-particle formula needs two --component values", variant=variant)
            (b2_1, b1_1, mu_1), (b2_2, b1_2, mu_2) = components
            if ordered:
                value = FormulaValue(variant, beta2_two_particle_ordered(b2_1, b2_2, b1_1, b1_2, mu_1, mu_2),
                                     EQ_TWO_PARTICLE_ORDERED)
            else:
                value = FormulaValue(variant, beta2_two_particle(b2_1, b2_2, b1_1, b1_2, mu_1, mu_2),
                                     EQ_TWO_PARTICLE)
        elif variant == "two-particle-multi":
            value = FormulaValue(variant, beta2_two_particle_multi(components, ordered=ordered), EQ_TWO_PARTICLE_MULTI)
        elif variant == "tree-pair":
            if not stars or len(stars) != 2:
                raise FormulaArgumentError("The tree-pair formula needs exactly two hub degrees", variant=variant)
            value = FormulaValue(variant, beta2_tree_pair(stars[0], stars[1], n), EQ_TREE_PAIR)
        elif variant in ("tree-recursive", "tree-closed", "tree-general"):
            shape, digest = self._shape(stars, graph_file)
            order = m if m is not None else len(shape.stars)
            if variant == "tree-recursive":
                value = FormulaValue(variant, betam_tree_recursive(shape, n, order), EQ_TREE_RECURSIVE)
            elif variant == "tree-closed":
                value = FormulaValue(variant, betam_tree_closed(shape.degrees, n, order), EQ_TREE_CLOSED)
            else:
                value = FormulaValue(variant, betam_tree_general(shape, n, order), EQ_TREE_GENERAL)
        elif variant == "single-edge":
            rows = list(betti_rows or [])
            b2 = list(b2 or [])
            if len(rows) != 2 or len(b2) != 2:
                raise FormulaArgumentError(
                    "The single-edge formula needs two --betti-row and two --b2 values", variant=variant
                )
            value = FormulaValue(variant, beta2_single_edge(rows[0], rows[1], b2[0], b2[1], n), EQ_SINGLE_EDGE,
                                 conjecture_conditional=True)
        else:
            raise FormulaArgumentError(
                f"Unknown formula variant '{variant}', expected one of {', '.join(FORMULA_VARIANTS)}", variant=variant
            )

        self.logger.info(f"Formula {value.equation} evaluated to {value.value}")
        return JobReport(
            command="formula",
            graph_fingerprint=digest,
            particles=n,
            flavor=ORDERED if ordered else UNORDERED,
            torsion=None,
            wall_time_seconds=round(time.perf_counter() - start, 6),
            formulas=[FormulaRecord(
                variant=value.variant,
                equation=value.equation,
                value=value.value,
                conjecture_conditional=value.conjecture_conditional,
            )],
        )

    def run_verify(
        self,
        particles: Sequence[int],
        orders: Sequence[int],
        graph_file: Optional[str] = None,
        stars: Optional[Sequence[int]] = None,
        ordered: bool = False,
        bigint: bool = False,
        budget: Optional[int] = None,
        spans: bool = False
    ) -> JobReport:
        """Check closed forms against exact homology over ranges of n and m"""
        start = time.perf_counter()
        if graph_file:
            graph, digest = self.load_graph(graph_file)
        elif stars:
            graph, digest = tree_from_shape(TreeShape.from_degrees(stars)), None
        else:
            raise FormulaArgumentError("verify needs --graph or --stars")

        computation = self.config.computation
        if bigint:
            computation = computation.model_copy(update={"arithmetic": "bigint"})
        cycles = CycleLibrary(spectator_limit=self.config.cycles.spectator_limit) if spans else None
        verifier = TheoremVerifier(config=computation, budget=self._budget(budget), cycles=cycles)
        flavor = ORDERED if ordered else UNORDERED
        checks = verifier.verify(graph, particles, orders, flavor)
        self._log_memory("Verification job")

        return JobReport(
            command="verify",
            graph_fingerprint=digest,
            flavor=flavor,
            torsion=None,
            wall_time_seconds=round(time.perf_counter() - start, 6),
            checks=[
                CheckRecord(
                    n=c.n, m=c.m, flavor=c.flavor, equation=c.equation,
                    formula_value=c.formula_value, oracle_value=c.oracle_value, verdict=c.verdict,
                )
                for c in checks
            ],
        )

    def dump_complex(self, graph_file: str, n: int, ordered: bool = False,
                     budget: Optional[int] = None) -> Dict[str, Any]:
        """Build the complex and return its JSON-ready dump"""
        graph, digest = self.load_graph(graph_file)
        flavor = ORDERED if ordered else UNORDERED
        refined = subdivide_for(graph, n)
        self._check_budget(refined, n, flavor, self._budget(budget))
        dump = {"graph_fingerprint": digest}
        dump.update(dump_complex(build_complex(refined, n, flavor)))
        return dump
