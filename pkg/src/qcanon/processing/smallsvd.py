from __future__ import annotations

import math

import numpy as np

from qcanon.domain.errors import NoConvergenceError
from qcanon.domain.models import CoefficientMatrix, MinimalDecomposition, SvdFactors, TermPair
from qcanon.domain.quaternion import from_vector
from qcanon.utils.logging import get_logger

logger = get_logger(__name__)

RANK_RTOL = 1e-10
OFFDIAG_RTOL = 1e-15
MAX_SWEEPS = 60


def _as_square(m: np.ndarray | CoefficientMatrix) -> np.ndarray:
    a = np.array(m.entries if isinstance(m, CoefficientMatrix) else m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or not 1 <= a.shape[0] <= 4:
        raise ValueError(f"Expected a square matrix of size 1..4, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("Matrix entries must be finite")
    return a


def _frobenius(a: np.ndarray) -> float:
    # divide by the largest entry first so the squares cannot overflow or underflow
    peak = float(np.max(np.abs(a)))
    if peak == 0.0:
        return 0.0
    return peak * float(np.linalg.norm(a / peak))


def _rotation(c: float, s: float) -> np.ndarray:
    return np.array([[c, s], [-s, c]])


def _svd_2x2(b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Rotations (left, right) with left^T b right diagonal.

    A first rotation symmetrizes b, then a symmetric Jacobi rotation
    diagonalizes the result.
    """
    phi = math.atan2(b[0, 1] - b[1, 0], b[0, 0] + b[1, 1])
    sym_rot = _rotation(math.cos(phi), math.sin(phi))
    s = sym_rot.T @ b

    app, apq, aqq = s[0, 0], 0.5 * (s[0, 1] + s[1, 0]), s[1, 1]
    if apq == 0.0:
        jac_rot = np.eye(2)
    else:
        tau = (aqq - app) / (2.0 * apq)
        if tau >= 0.0:
            t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
        else:
            t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
        c = 1.0 / math.sqrt(1.0 + t * t)
        jac_rot = _rotation(c, t * c)

    return sym_rot @ jac_rot, jac_rot


def svd(
    m: np.ndarray | CoefficientMatrix,
    *,
    offdiag_rtol: float = OFFDIAG_RTOL,
    max_sweeps: int = MAX_SWEEPS,
) -> SvdFactors:
    """
    Singular value decomposition of a real n x n matrix (n <= 4) by cyclic
    two-sided Jacobi rotations.

    Sweeps continue until every off-diagonal pair is below `offdiag_rtol`
    times the Frobenius norm, which bounds the largest singular value.

    Sign convention: the largest-magnitude entry of each column of v is
    non-negative, u absorbs the flip.
    """
    a = _as_square(m)
    n = a.shape[0]
    u = np.eye(n)
    v = np.eye(n)

    threshold = offdiag_rtol * _frobenius(a)
    sweeps = 0
    converged = False

    while not converged:
        converged = True
        for p in range(n - 1):
            for q in range(p + 1, n):
                if max(abs(a[p, q]), abs(a[q, p])) <= threshold:
                    continue
                converged = False

                idx = [p, q]
                left, right = _svd_2x2(a[np.ix_(idx, idx)])
                a[idx, :] = left.T @ a[idx, :]
                a[:, idx] = a[:, idx] @ right
                # exact zeros in the rotated plane
                a[p, q] = 0.0
                a[q, p] = 0.0
                u[:, idx] = u[:, idx] @ left
                v[:, idx] = v[:, idx] @ right

        if converged:
            break
        sweeps += 1
        if sweeps >= max_sweeps:
            off = float(np.max(np.abs(a - np.diag(np.diag(a)))))
            raise NoConvergenceError(
                f"Jacobi SVD did not converge after {sweeps} sweeps "
                f"(max off-diagonal {off:.3e}, threshold {threshold:.3e})"
            )

    d = np.diag(a).copy()
    negative = d < 0
    u[:, negative] *= -1.0
    sigma = np.abs(d)

    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    u = u[:, order]
    v = v[:, order]

    for k in range(n):
        pivot = int(np.argmax(np.abs(v[:, k])))
        if v[pivot, k] < 0:
            v[:, k] *= -1.0
            u[:, k] *= -1.0

    logger.debug(f"Jacobi SVD of {n}x{n} matrix converged in {sweeps} sweeps")
    return SvdFactors(u=u, sigma=sigma, v=v, sweeps=sweeps)


def rank_from_sigma(sigma: np.ndarray, *, rtol: float = RANK_RTOL) -> int:
    if len(sigma) == 0:
        return 0
    cutoff = rtol * max(float(sigma[0]), 1e-300)
    return int(np.count_nonzero(sigma > cutoff))


def numeric_rank(m: np.ndarray | CoefficientMatrix, *, rtol: float = RANK_RTOL) -> int:
    """
    Number of singular values above rtol * sigma_1. The zero matrix has rank 0.
    """
    return rank_from_sigma(svd(m).sigma, rtol=rtol)


def minimal_decomposition(
    m: CoefficientMatrix,
    *,
    rtol: float = RANK_RTOL,
    factors: SvdFactors | None = None,
) -> MinimalDecomposition:
    """
    Factor M = U Sigma V^T = L V^T and turn each pair of corresponding columns
    of L and V into one double-sided term left_k q right_k.

    The number of terms equals the numeric rank of M (at most four).
    Precomputed `factors` of M may be passed in to skip the SVD.
    """
    if factors is None:
        factors = svd(m)
    rank = rank_from_sigma(factors.sigma, rtol=rtol)
    lf = factors.left_factors
    terms = tuple(
        TermPair(left=from_vector(lf[:, k]), right=from_vector(factors.v[:, k]))
        for k in range(rank)
    )
    return MinimalDecomposition(terms=terms, singular_values=tuple(factors.sigma.tolist()))
