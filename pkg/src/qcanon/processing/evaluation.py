from __future__ import annotations

import numpy as np

from qcanon.domain.errors import SingularFunctionError
from qcanon.domain.models import GeneralLinearFunction
from qcanon.domain.quaternion import (
    BASIS,
    ZERO,
    Quaternion,
    add,
    as_vector,
    from_vector,
    multiply,
)
from qcanon.processing.coefficient_matrix import function_matrix
from qcanon.processing.smallsvd import RANK_RTOL, rank_from_sigma, svd
from qcanon.utils.logging import get_logger

logger = get_logger(__name__)

EQUAL_TOL = 1e-12


def evaluate(f: GeneralLinearFunction, q: Quaternion) -> Quaternion:
    """f(q) = sum of m_p q n_p."""
    total = ZERO
    for t in f.terms:
        total = add(total, multiply(multiply(t.left, q), t.right))
    return total


def action_matrix(f: GeneralLinearFunction) -> np.ndarray:
    """
    The real 4x4 matrix F with vec(f(q)) = F vec(q).
    Column c is vec(f(e_c)) for e = (1, i, j, k).
    """
    return np.column_stack([as_vector(evaluate(f, e)) for e in BASIS])


def solve(
    f: GeneralLinearFunction, r: Quaternion, *, rtol: float = RANK_RTOL
) -> Quaternion:
    """
    Find q with f(q) = r.

    Raises SingularFunctionError if the action matrix is numerically
    rank-deficient (f is not injective).
    """
    factors = svd(action_matrix(f))
    rank = rank_from_sigma(factors.sigma, rtol=rtol)
    if rank < 4:
        logger.warning(f"Cannot solve: action matrix has rank {rank}")
        raise SingularFunctionError(f"function is singular (action matrix rank {rank})")

    # q = V Sigma^-1 U^T r
    coords = (factors.u.T @ as_vector(r)) / factors.sigma
    return from_vector(factors.v @ coords)


def residual_norm(f: GeneralLinearFunction, q: Quaternion, r: Quaternion) -> float:
    return float(np.linalg.norm(as_vector(evaluate(f, q)) - as_vector(r)))


def matrix_difference(f: GeneralLinearFunction, g: GeneralLinearFunction) -> float:
    """Largest entrywise difference between the coefficient matrices."""
    return float(np.max(np.abs(function_matrix(f).entries - function_matrix(g).entries)))


def functions_equal(
    f: GeneralLinearFunction, g: GeneralLinearFunction, tol: float = EQUAL_TOL
) -> bool:
    """
    True iff the coefficient matrices agree entrywise within
    tol * (1 + largest absolute entry of either matrix).
    """
    if tol < 0:
        raise ValueError(f"tol must be >= 0, got {tol}")
    mf = function_matrix(f).entries
    mg = function_matrix(g).entries
    magnitude = max(float(np.max(np.abs(mf))), float(np.max(np.abs(mg))))
    return float(np.max(np.abs(mf - mg))) <= tol * (1.0 + magnitude)
