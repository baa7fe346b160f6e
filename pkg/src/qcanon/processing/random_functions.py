from __future__ import annotations

from qcanon.domain.models import GeneralLinearFunction, MeisterForm, TermPair
from qcanon.domain.quaternion import Quaternion

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg64:
    """
    64-bit linear congruential generator, state <- (a * state + c) mod 2**64,
    with Knuth's MMIX constants.

    Each draw advances the state once and maps its top 53 bits to [-1, 1).
    The sequence depends only on the seed, on any platform or language.
    """

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (LCG_MULTIPLIER * self._state + LCG_INCREMENT) & _MASK64
        return self._state

    def uniform(self) -> float:
        """Uniform on [-1, 1)."""
        return 2.0 * ((self.next_u64() >> 11) / float(1 << 53)) - 1.0

    def quaternion(self) -> Quaternion:
        return Quaternion(self.uniform(), self.uniform(), self.uniform(), self.uniform())


def random_function(terms: int, rng: Lcg64) -> GeneralLinearFunction:
    """
    `terms` random double-sided terms; per term the left then the right
    coefficient, each drawn in (w, x, y, z) order.
    """
    if terms < 0:
        raise ValueError(f"terms must be >= 0, got {terms}")
    return GeneralLinearFunction(
        tuple(TermPair(left=rng.quaternion(), right=rng.quaternion()) for _ in range(terms))
    )


def random_meister(rng: Lcg64) -> MeisterForm:
    return MeisterForm(
        a=rng.quaternion(), b=rng.quaternion(), c=rng.quaternion(), d=rng.quaternion()
    )
