from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from qcanon.domain.quaternion import PureQuaternion, Quaternion


def _frozen_array(values, shape: tuple[int, ...], name: str) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    if arr.shape != shape:
        raise ValueError(f"{name} must have shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} entries must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class TermPair:
    """
    One double-sided term m q n of a linear quaternion function.
    """

    left: Quaternion
    right: Quaternion


@dataclass(frozen=True)
class GeneralLinearFunction:
    """
    f(q) = sum over p of left_p q right_p.
    The empty term list is the zero function.
    """

    terms: tuple[TermPair, ...] = ()

    def __post_init__(self) -> None:
        # accept any sequence, store a tuple
        object.__setattr__(self, "terms", tuple(self.terms))

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[Quaternion, Quaternion]]
    ) -> GeneralLinearFunction:
        return cls(tuple(TermPair(left=m, right=n) for m, n in pairs))

    def concat(self, other: GeneralLinearFunction) -> GeneralLinearFunction:
        return GeneralLinearFunction(self.terms + other.terms)

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True, eq=False)
class CoefficientMatrix:
    """
    The 4x4 real matrix M of a linear quaternion function.

    Entry (r, c) is the total coefficient of e_r q e_c with e = (1, i, j, k):
    rows follow the left coefficient's components, columns the right's.
    The array is read-only.
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "entries", _frozen_array(self.entries, (4, 4), "CoefficientMatrix")
        )

    @classmethod
    def zeros(cls) -> CoefficientMatrix:
        return cls(np.zeros((4, 4)))

    def __add__(self, other: CoefficientMatrix) -> CoefficientMatrix:
        return CoefficientMatrix(self.entries + other.entries)

    def __getitem__(self, index: tuple[int, int]) -> float:
        return float(self.entries[index])

    @property
    def lower_block(self) -> np.ndarray:
        """The lower-right 3x3 block, coefficients of e_r q e_c for r, c in {i, j, k}."""
        return self.entries[1:, 1:]

    def tolist(self) -> list[list[float]]:
        return self.entries.tolist()


@dataclass(frozen=True)
class CanonicFormLeft:
    """f(q) = Aq + Bqi + Cqj + Dqk."""

    a: Quaternion
    b: Quaternion
    c: Quaternion
    d: Quaternion


@dataclass(frozen=True)
class CanonicFormRight:
    """f(q) = qA' + iqB' + jqC' + kqD'."""

    a: Quaternion
    b: Quaternion
    c: Quaternion
    d: Quaternion


@dataclass(frozen=True)
class MixedForm:
    """f(q) = Aq + qb + v1 q i + v3 q j + v5 q k, with b and the v's pure."""

    a: Quaternion
    b: PureQuaternion
    v1: PureQuaternion
    v3: PureQuaternion
    v5: PureQuaternion


@dataclass(frozen=True)
class BilateralPair:
    left: PureQuaternion
    right: PureQuaternion


@dataclass(frozen=True)
class PureBilateralForm:
    """f(q) = Aq + qb + sum of v_left q v_right over at most three pairs."""

    a: Quaternion
    b: PureQuaternion
    pairs: tuple[BilateralPair, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(self.pairs))
        if len(self.pairs) > 3:
            raise ValueError(f"At most 3 bilateral pairs, got {len(self.pairs)}")


@dataclass(frozen=True)
class MeisterForm:
    """f(q) = Aq + qB + CqD."""

    a: Quaternion
    b: Quaternion
    c: Quaternion
    d: Quaternion


@dataclass(frozen=True, eq=False)
class SvdFactors:
    """
    m = u diag(sigma) v^T with u, v orthogonal and sigma descending, non-negative.
    """

    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray
    sweeps: int = 0

    def __post_init__(self) -> None:
        n = len(self.sigma)
        object.__setattr__(self, "u", _frozen_array(self.u, (n, n), "u"))
        object.__setattr__(self, "sigma", _frozen_array(self.sigma, (n,), "sigma"))
        object.__setattr__(self, "v", _frozen_array(self.v, (n, n), "v"))

    @property
    def left_factors(self) -> np.ndarray:
        """L = U Sigma, so that m = L V^T."""
        return self.u * self.sigma

    def reconstruct(self) -> np.ndarray:
        return (self.u * self.sigma) @ self.v.T


@dataclass(frozen=True)
class MinimalDecomposition:
    """
    f(q) = sum over k of left_k q right_k with one term per non-negligible singular value,
    ordered by descending singular value. `singular_values` keeps the full spectrum of M.
    """

    terms: tuple[TermPair, ...] = ()
    singular_values: tuple[float, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "singular_values", tuple(self.singular_values))

    def __len__(self) -> int:
        return len(self.terms)
