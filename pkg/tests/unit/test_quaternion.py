import math

import numpy as np
import pytest
from hypothesis import given

from qcanon.domain.quaternion import (
    I,
    J,
    K,
    ONE,
    ZERO,
    PureQuaternion,
    Quaternion,
    as_vector,
    conjugate,
    format_quaternion,
    from_vector,
    multiply,
    norm,
    scale,
)
from tests.unit.helpers import quaternions, random_quaternion


def test_basis_products_follow_hamilton_rules():
    assert multiply(I, J) == K
    assert multiply(J, K) == I
    assert multiply(K, I) == J
    assert multiply(J, I) == -K
    assert multiply(I, K) == -J
    assert multiply(I, I) == -ONE
    assert multiply(multiply(I, J), K) == -ONE


def test_one_is_the_identity(rng):
    q = random_quaternion(rng)
    assert multiply(ONE, q) == q
    assert multiply(q, ONE) == q


def test_conjugate_negates_vector_part():
    assert conjugate(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4)


def test_scale_by_zero_gives_zero():
    assert scale(I, 0.0) == ZERO


@given(quaternions, quaternions)
def test_conjugate_of_product_reverses_order_exactly(a, b):
    assert conjugate(multiply(a, b)) == multiply(conjugate(b), conjugate(a))


@given(quaternions, quaternions)
def test_norm_is_multiplicative(a, b):
    assert math.isclose(
        norm(multiply(a, b)), norm(a) * norm(b), rel_tol=1e-12, abs_tol=1e-12
    )


@given(quaternions, quaternions, quaternions)
def test_multiplication_is_associative(a, b, c):
    lhs = as_vector(multiply(multiply(a, b), c))
    rhs = as_vector(multiply(a, multiply(b, c)))
    scale_ = 1.0 + norm(a) * norm(b) * norm(c)
    np.testing.assert_allclose(lhs, rhs, rtol=0, atol=1e-12 * scale_)


def test_vector_round_trip(rng):
    q = random_quaternion(rng)
    assert from_vector(as_vector(q)) == q
    np.testing.assert_array_equal(as_vector(J), [0.0, 0.0, 1.0, 0.0])
    np.testing.assert_array_equal(as_vector(ZERO), np.zeros(4))


def test_from_vector_rejects_wrong_length():
    with pytest.raises(ValueError, match="4 components"):
        from_vector([1.0, 2.0, 3.0])


def test_non_finite_components_are_rejected():
    with pytest.raises(ValueError, match="finite"):
        Quaternion(float("nan"), 0.0, 0.0, 0.0)
    with pytest.raises(ValueError, match="finite"):
        PureQuaternion(0.0, float("inf"), 0.0)


def test_operators():
    q = Quaternion(1, 2, 3, 4)
    assert q + q == Quaternion(2, 4, 6, 8)
    assert q - q == ZERO
    assert 2 * q == q * 2.0 == Quaternion(2, 4, 6, 8)
    assert I * J == K


def test_pure_quaternion_has_zero_scalar_part():
    v = PureQuaternion.from_vector3([1.0, -2.0, 0.5])
    assert v.w == 0.0
    assert v.to_quaternion() == Quaternion(0.0, 1.0, -2.0, 0.5)


def test_format_quaternion_is_sign_aware():
    assert format_quaternion(Quaternion(1, -2, 0.5, 0)) == "1 - 2i + 0.5j + 0k"
    assert format_quaternion(Quaternion(-0.0, 0, 0, 1.0 / 3.0)) == "0 + 0i + 0j + 0.333333k"
    assert str(Quaternion(0, 0, 0, -1)) == "0 + 0i + 0j - 1k"
