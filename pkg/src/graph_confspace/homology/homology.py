#!/usr/bin/env python3
"""
Integer homology of chain complexes via Smith normal form
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, List, Optional, Tuple

from ..core.config import INT64_MAX
from ..core.logger import LoggerMixin, log_duration
from .smith import Arithmetic, SmithForm, matrix_rank, smith_normal_form
from .sparse import SparseIntMatrix

if TYPE_CHECKING:
    from ..complexes.builder import ChainComplex


@dataclass(frozen=True)
class HomologyResult:
    """Betti numbers and torsion coefficients per dimension"""
    betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]
    torsion_computed: bool = True

    def betti_k(self, k: int) -> int:
        return self.betti[k] if 0 <= k < len(self.betti) else 0

    def torsion_k(self, k: int) -> Tuple[int, ...]:
        return self.torsion[k] if 0 <= k < len(self.torsion) else ()

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    @property
    def has_torsion(self) -> bool:
        return any(self.torsion)


def _reduce(job: Tuple[SparseIntMatrix, bool, str, int]) -> Tuple[int, Tuple[int, ...]]:
    matrix, with_torsion, arithmetic, bound = job
    if with_torsion:
        form: SmithForm = smith_normal_form(matrix, arithmetic=arithmetic, bound=bound)
        return form.rank, tuple(form.torsion)
    return matrix_rank(matrix), ()


class HomologyCalculator(LoggerMixin):
    """Computes homology of configuration-space complexes"""

    def __init__(
        self,
        arithmetic: Arithmetic = "checked",
        bound: int = INT64_MAX,
        parallel: bool = False,
        max_workers: int = 4
    ):
        self.arithmetic = arithmetic
        self.bound = bound
        self.parallel = parallel
        self.max_workers = max_workers
        self.logger.info("Homology Calculator initialized")

    def compute(self, complex_: ChainComplex, max_dim: Optional[int] = None, torsion: bool = True) -> HomologyResult:
        """
        Homology of a complex

        Args:
            complex_: Complex satisfying boundary o boundary = 0
            max_dim: Highest dimension reported; defaults to the top cell dimension
            torsion: False computes ranks over the rationals only

        Returns:
            HomologyResult; dimensions above the top cell dimension report zero
        """
        top = complex_.top_dimension
        last = top if max_dim is None else max_dim
        if last < 0:
            raise ValueError(f"max_dim must be non-negative, got {max_dim}")

        # ranks of boundary_1 .. boundary_(last + 1) that exist
        needed = list(range(1, min(last + 1, top) + 1))
        jobs = [(complex_.boundary_matrix(k), torsion, self.arithmetic, self.bound) for k in needed]

        with log_duration(self.logger, f"Homology of {complex_.flavor} complex with n={complex_.particles}"):
            if self.parallel and len(jobs) > 1:
                with ProcessPoolExecutor(max_workers=self.max_workers) as pool:
                    reduced = list(pool.map(_reduce, jobs))
            else:
                reduced = [_reduce(job) for job in jobs]

        ranks = {k: rank for k, (rank, _) in zip(needed, reduced)}
        factors = {k: tors for k, (_, tors) in zip(needed, reduced)}

        counts = complex_.cell_counts
        betti: List[int] = []
        torsion_groups: List[Tuple[int, ...]] = []
        for k in range(last + 1):
            cells = counts[k] if k < len(counts) else 0
            betti.append(cells - ranks.get(k, 0) - ranks.get(k + 1, 0))
            torsion_groups.append(factors.get(k + 1, ()))

        self.logger.debug(f"Betti numbers {betti}, torsion {torsion_groups}")
        return HomologyResult(betti=tuple(betti), torsion=tuple(torsion_groups), torsion_computed=torsion)


def homology(
    complex_: ChainComplex,
    max_dim: Optional[int] = None,
    arithmetic: Arithmetic = "checked",
    torsion: bool = True,
    parallel: bool = False,
    max_workers: int = 4,
    bound: int = INT64_MAX
) -> HomologyResult:
    """H_k = ker d_k / im d_(k+1) for every dimension; see HomologyCalculator.compute"""
    calculator = HomologyCalculator(arithmetic=arithmetic, bound=bound, parallel=parallel, max_workers=max_workers)
    return calculator.compute(complex_, max_dim=max_dim, torsion=torsion)


def betti_vector(complex_: ChainComplex, **kwargs) -> List[int]:
    return list(homology(complex_, **kwargs).betti)
