import numpy as np
from hypothesis import strategies as st

from qcanon.domain.models import GeneralLinearFunction, TermPair
from qcanon.domain.quaternion import Quaternion, as_vector, from_vector

components = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_subnormal=False)
quaternions = st.builds(Quaternion, components, components, components, components)
term_pairs = st.builds(TermPair, left=quaternions, right=quaternions)
functions = st.builds(GeneralLinearFunction, st.lists(term_pairs, max_size=6).map(tuple))


def random_quaternion(rng: np.random.Generator) -> Quaternion:
    return from_vector(rng.uniform(-1.0, 1.0, size=4))


def random_terms(rng: np.random.Generator, terms: int) -> GeneralLinearFunction:
    return GeneralLinearFunction(
        tuple(
            TermPair(left=random_quaternion(rng), right=random_quaternion(rng))
            for _ in range(terms)
        )
    )


def assert_quaternion_close(actual: Quaternion, expected: Quaternion, atol: float) -> None:
    np.testing.assert_allclose(as_vector(actual), as_vector(expected), rtol=0, atol=atol)


def eigenvalues_by_bisection(s: np.ndarray, iterations: int = 200) -> np.ndarray:
    """
    Eigenvalues of a symmetric matrix, ascending, by bisection on the inertia
    count: the number of negative pivots of the LDL^T factorization of
    s - x I equals the number of eigenvalues below x.
    """
    n = s.shape[0]
    bound = float(np.sum(np.abs(s))) + 1.0

    def count_below(x: float) -> int:
        a = s - x * np.eye(n)
        negatives = 0
        for k in range(n):
            pivot = a[k, k]
            if pivot == 0.0:
                pivot = 1e-300
            if pivot < 0.0:
                negatives += 1
            a[k + 1 :, k + 1 :] -= np.outer(a[k + 1 :, k], a[k, k + 1 :]) / pivot
        return negatives

    out = []
    for k in range(n):
        lo, hi = -bound, bound
        for _ in range(iterations):
            mid = 0.5 * (lo + hi)
            if mid == lo or mid == hi:
                break
            if count_below(mid) > k:
                hi = mid
            else:
                lo = mid
        out.append(0.5 * (lo + hi))
    return np.array(out)
