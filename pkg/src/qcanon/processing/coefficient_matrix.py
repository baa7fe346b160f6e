from __future__ import annotations

from typing import Sequence

import numpy as np

from qcanon.domain.models import (
    CoefficientMatrix,
    GeneralLinearFunction,
    MeisterForm,
    TermPair,
)
from qcanon.domain.quaternion import ONE, as_vector
from qcanon.processing.smallsvd import RANK_RTOL, numeric_rank


def term_matrix(t: TermPair) -> CoefficientMatrix:
    """
    Outer product of the component vectors of the left and right coefficients.
    Always rank <= 1.
    """
    return CoefficientMatrix(np.outer(as_vector(t.left), as_vector(t.right)))


def function_matrix(f: GeneralLinearFunction) -> CoefficientMatrix:
    """
    Sum of the term matrices. Entry (r, c) collects every product of
    left component r with right component c over all terms.
    """
    total = np.zeros((4, 4))
    for t in f.terms:
        total += np.outer(as_vector(t.left), as_vector(t.right))
    return CoefficientMatrix(total)


def meister_function(mf: MeisterForm) -> GeneralLinearFunction:
    """Aq + qB + CqD as the three terms (A, 1), (1, B), (C, D)."""
    return GeneralLinearFunction.from_pairs([(mf.a, ONE), (ONE, mf.b), (mf.c, mf.d)])


def build_meister(mf: MeisterForm) -> CoefficientMatrix:
    return function_matrix(meister_function(mf))


def build_extended_meister(mf: MeisterForm, extra: Sequence[TermPair]) -> CoefficientMatrix:
    """
    Matrix of Aq + qB + CqD plus further double-sided terms EqF.

    Aq only touches the first column and qB the first row, so the lower 3x3
    block gets rank <= 1 from each double-sided term.
    """
    return function_matrix(meister_function(mf).concat(GeneralLinearFunction(tuple(extra))))


def lower_block_rank(m: CoefficientMatrix, *, rtol: float = RANK_RTOL) -> int:
    return numeric_rank(m.lower_block, rtol=rtol)
