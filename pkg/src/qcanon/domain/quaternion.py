from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class Quaternion:
    """
    A real quaternion w + xi + yj + zk.

    Components are ordered (w, x, y, z) everywhere: vectors, matrices and files.
    """

    w: float
    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for name in ("w", "x", "y", "z"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"Quaternion component {name} must be finite, got {value}")

    def __add__(self, other: Quaternion) -> Quaternion:
        return add(self, other)

    def __sub__(self, other: Quaternion) -> Quaternion:
        return add(self, scale(other, -1.0))

    def __neg__(self) -> Quaternion:
        return scale(self, -1.0)

    def __mul__(self, other: Quaternion | float) -> Quaternion:
        if isinstance(other, Quaternion):
            return multiply(self, other)
        return scale(self, other)

    def __rmul__(self, other: float) -> Quaternion:
        return scale(self, other)

    def __str__(self) -> str:
        return format_quaternion(self)


@dataclass(frozen=True)
class PureQuaternion:
    """
    A quaternion with identically zero scalar part (a "vector" xi + yj + zk).
    """

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(
                    f"PureQuaternion component {name} must be finite, got {value}"
                )

    @property
    def w(self) -> float:
        return 0.0

    def to_quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    @classmethod
    def from_vector3(cls, v: Sequence[float]) -> PureQuaternion:
        if len(v) != 3:
            raise ValueError(f"Expected 3 components, got {len(v)}")
        return cls(float(v[0]), float(v[1]), float(v[2]))

    def __str__(self) -> str:
        return format_quaternion(self.to_quaternion())


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)  # noqa: E741
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)

# e_0..e_3, indexing the rows and columns of a coefficient matrix
BASIS: tuple[Quaternion, Quaternion, Quaternion, Quaternion] = (ONE, I, J, K)


def multiply(a: Quaternion, b: Quaternion) -> Quaternion:
    """
    Hamilton product a·b under i² = j² = k² = ijk = -1.

    Terms are grouped as scalar/vector parts, w = a.w b.w - a.v·b.v and
    v = (a.w b.v + b.w a.v) + a.v × b.v, so conjugate(a·b) and
    conjugate(b)·conjugate(a) round identically.
    """
    w = a.w * b.w - (a.x * b.x + a.y * b.y + a.z * b.z)
    x = (a.w * b.x + a.x * b.w) + (a.y * b.z - a.z * b.y)
    y = (a.w * b.y + a.y * b.w) + (a.z * b.x - a.x * b.z)
    z = (a.w * b.z + a.z * b.w) + (a.x * b.y - a.y * b.x)
    return Quaternion(w, x, y, z)


def add(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z)


def scale(a: Quaternion, s: float) -> Quaternion:
    return Quaternion(a.w * s, a.x * s, a.y * s, a.z * s)


def conjugate(a: Quaternion) -> Quaternion:
    return Quaternion(a.w, -a.x, -a.y, -a.z)


def norm(a: Quaternion) -> float:
    return math.hypot(a.w, a.x, a.y, a.z)


def quaternion_sum(values: Sequence[Quaternion]) -> Quaternion:
    total = ZERO
    for value in values:
        total = add(total, value)
    return total


def as_vector(a: Quaternion) -> np.ndarray:
    """Component 4-vector (w, x, y, z)."""
    return np.array([a.w, a.x, a.y, a.z], dtype=np.float64)


def from_vector(v: Sequence[float] | np.ndarray) -> Quaternion:
    if len(v) != 4:
        raise ValueError(f"Expected 4 components (w, x, y, z), got {len(v)}")
    return Quaternion(float(v[0]), float(v[1]), float(v[2]), float(v[3]))


def format_quaternion(a: Quaternion, digits: int = 6) -> str:
    """Human-readable "w + xi + yj + zk" with `digits` significant digits."""
    parts = [f"{a.w + 0.0:.{digits}g}"]
    for value, unit in ((a.x, "i"), (a.y, "j"), (a.z, "k")):
        sign = "-" if value < 0 else "+"
        parts.append(f"{sign} {abs(value):.{digits}g}{unit}")
    return " ".join(parts)
