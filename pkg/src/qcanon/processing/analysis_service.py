from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from qcanon.config.settings import Settings
from qcanon.domain.models import (
    CoefficientMatrix,
    GeneralLinearFunction,
    MeisterForm,
    MinimalDecomposition,
    SvdFactors,
    TermPair,
)
from qcanon.domain.quaternion import Quaternion
from qcanon.processing.canonic_forms import (
    Form,
    canonic_left,
    canonic_right,
    mixed_form,
    pure_bilateral_form,
)
from qcanon.processing.coefficient_matrix import (
    build_extended_meister,
    build_meister,
    function_matrix,
)
from qcanon.processing.evaluation import (
    evaluate,
    functions_equal,
    matrix_difference,
    residual_norm,
    solve,
)
from qcanon.processing.random_functions import Lcg64, random_function, random_meister
from qcanon.processing.smallsvd import minimal_decomposition, rank_from_sigma, svd
from qcanon.utils.logging import get_logger

logger = get_logger(__name__)

Side = Literal["left", "right", "mixed", "bilateral"]
SIDES: tuple[str, ...] = ("left", "right", "mixed", "bilateral")

# terms in the general function the Meister form is compared against
MEISTER_DEMO_TERMS = 10


@dataclass(frozen=True)
class MatrixSummary:
    matrix: CoefficientMatrix
    rank: int
    singular_values: tuple[float, ...]
    lower_block_rank: int


@dataclass(frozen=True)
class CanonizationReport:
    side: str
    form: Form
    summary: MatrixSummary


@dataclass(frozen=True)
class MinimizationReport:
    decomposition: MinimalDecomposition
    summary: MatrixSummary


@dataclass(frozen=True)
class SolveReport:
    q: Quaternion
    residual_norm: float


@dataclass(frozen=True)
class ComparisonReport:
    equal: bool
    max_difference: float
    tolerance: float


@dataclass(frozen=True)
class MeisterDemoReport:
    seed: int
    meister: MeisterForm
    meister_summary: MatrixSummary
    extended_summary: MatrixSummary
    general_summary: MatrixSummary

    @property
    def representable(self) -> bool:
        return self.meister_summary.rank >= self.general_summary.rank


class FunctionAnalysisService:
    """
    Runs canonization, decomposition and analysis requests for the CLI.
    Rank and equality tolerances come from Settings.
    """

    def __init__(self, settings: Settings | None = None) -> None:
        self._settings = settings or Settings()

    @property
    def settings(self) -> Settings:
        return self._settings

    def _svd(self, m: CoefficientMatrix | np.ndarray) -> SvdFactors:
        return svd(
            m,
            offdiag_rtol=self._settings.svd_offdiag_rtol,
            max_sweeps=self._settings.svd_max_sweeps,
        )

    def summarize(self, m: CoefficientMatrix) -> MatrixSummary:
        rtol = self._settings.rank_rtol
        factors = self._svd(m)
        return MatrixSummary(
            matrix=m,
            rank=rank_from_sigma(factors.sigma, rtol=rtol),
            singular_values=tuple(factors.sigma.tolist()),
            lower_block_rank=rank_from_sigma(self._svd(m.lower_block).sigma, rtol=rtol),
        )

    def canonize(self, f: GeneralLinearFunction, side: Side) -> CanonizationReport:
        m = function_matrix(f)
        if side == "left":
            form: Form = canonic_left(m)
        elif side == "right":
            form = canonic_right(m)
        elif side == "mixed":
            form = mixed_form(m)
        elif side == "bilateral":
            form = pure_bilateral_form(
                m, rtol=self._settings.rank_rtol, factors=self._svd(m.lower_block)
            )
        else:
            raise ValueError(f"Unknown side {side!r}, expected one of {SIDES}")

        summary = self.summarize(m)
        logger.info(f"Canonized {len(f)}-term function: side={side}, rank={summary.rank}")
        return CanonizationReport(side=side, form=form, summary=summary)

    def all_forms(self, f: GeneralLinearFunction) -> list[CanonizationReport]:
        return [self.canonize(f, side) for side in SIDES]

    def minimize(self, f: GeneralLinearFunction) -> MinimizationReport:
        m = function_matrix(f)
        decomposition = minimal_decomposition(
            m, rtol=self._settings.rank_rtol, factors=self._svd(m)
        )
        summary = self.summarize(m)
        logger.info(
            f"Minimized {len(f)}-term function to {len(decomposition)} terms "
            f"(rank {summary.rank})"
        )
        return MinimizationReport(decomposition=decomposition, summary=summary)

    def evaluate(self, f: GeneralLinearFunction, q: Quaternion) -> Quaternion:
        return evaluate(f, q)

    def solve(self, f: GeneralLinearFunction, r: Quaternion) -> SolveReport:
        q = solve(f, r, rtol=self._settings.rank_rtol)
        return SolveReport(q=q, residual_norm=residual_norm(f, q, r))

    def compare(
        self,
        f: GeneralLinearFunction,
        g: GeneralLinearFunction,
        tol: float | None = None,
    ) -> ComparisonReport:
        tolerance = self._settings.equal_tol if tol is None else tol
        equal = functions_equal(f, g, tolerance)
        diff = matrix_difference(f, g)
        logger.info(f"Compared functions: equal={equal}, max_difference={diff:.3e}")
        return ComparisonReport(equal=equal, max_difference=diff, tolerance=tolerance)

    def random_function(self, terms: int, seed: int) -> GeneralLinearFunction:
        return random_function(terms, Lcg64(seed))

    def meister_demo(self, seed: int) -> MeisterDemoReport:
        """
        Draw a random Meister form Aq + qB + CqD, the same form extended by a
        fourth term EqF, and a general function, all from one seeded stream.

        The Meister matrix has rank <= 3 while a general function has rank 4.
        With EqF added the rank can reach 4, but the lower 3x3 block, which
        only double-sided terms reach, stays at rank <= 2 instead of 3.
        """
        rng = Lcg64(seed)
        meister = random_meister(rng)
        extra = TermPair(left=rng.quaternion(), right=rng.quaternion())
        general = random_function(MEISTER_DEMO_TERMS, rng)

        report = MeisterDemoReport(
            seed=seed,
            meister=meister,
            meister_summary=self.summarize(build_meister(meister)),
            extended_summary=self.summarize(build_extended_meister(meister, [extra])),
            general_summary=self.summarize(function_matrix(general)),
        )
        logger.info(
            f"Meister demo seed={seed}: meister rank {report.meister_summary.rank}, "
            f"general rank {report.general_summary.rank}"
        )
        return report
