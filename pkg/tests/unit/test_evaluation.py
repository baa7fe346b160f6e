import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcanon.domain.errors import SingularFunctionError
from qcanon.domain.models import GeneralLinearFunction
from qcanon.domain.quaternion import (
    BASIS,
    I,
    J,
    K,
    ONE,
    ZERO,
    Quaternion,
    as_vector,
    conjugate,
    multiply,
    norm,
    scale,
)
from qcanon.processing.canonic_forms import canonic_left, to_function
from qcanon.processing.coefficient_matrix import function_matrix
from qcanon.processing.evaluation import (
    action_matrix,
    evaluate,
    functions_equal,
    matrix_difference,
    residual_norm,
    solve,
)
from tests.unit.helpers import (
    assert_quaternion_close,
    functions,
    quaternions,
    random_quaternion,
    random_terms,
)


def test_evaluate_single_term_on_basis(load_fixture):
    # i k j = (-j) j = 1
    assert evaluate(load_fixture("iqj.json"), K) == ONE


def test_evaluate_zero_function(load_fixture, rng):
    assert evaluate(load_fixture("zero.json"), random_quaternion(rng)) == ZERO


def test_basis_terms_evaluate_to_negated_double_conjugate(load_fixture):
    f = load_fixture("sum_of_basis_terms.json")
    q = Quaternion(1, 2, 3, 4)

    assert evaluate(f, q) == Quaternion(-2, 4, 6, 8)
    assert evaluate(f, q) == scale(conjugate(q), -2.0)


@given(functions, quaternions, quaternions, st.floats(min_value=-10, max_value=10))
def test_evaluate_is_real_linear(f, q1, q2, s):
    magnitude = 1.0 + sum(norm(t.left) * norm(t.right) for t in f.terms)
    atol = 1e-12 * magnitude * (1.0 + norm(q1) + norm(q2)) * (1.0 + abs(s))

    assert_quaternion_close(evaluate(f, q1 + q2), evaluate(f, q1) + evaluate(f, q2), atol)
    assert_quaternion_close(evaluate(f, s * q1), s * evaluate(f, q1), atol)


def test_action_matrix_of_identity_and_conjugation(load_fixture):
    np.testing.assert_array_equal(action_matrix(load_fixture("identity.json")), np.eye(4))
    np.testing.assert_array_equal(
        action_matrix(load_fixture("conjugation.json")), np.diag([1.0, -1.0, -1.0, -1.0])
    )


def test_action_matrix_of_left_multiplication_by_i():
    f = GeneralLinearFunction.from_pairs([(I, ONE)])
    expected = np.column_stack([as_vector(multiply(I, e)) for e in BASIS])
    np.testing.assert_array_equal(action_matrix(f), expected)


@given(functions, quaternions)
def test_action_matrix_applies_the_function(f, q):
    magnitude = 1.0 + sum(norm(t.left) * norm(t.right) for t in f.terms)
    np.testing.assert_allclose(
        action_matrix(f) @ as_vector(q),
        as_vector(evaluate(f, q)),
        rtol=0,
        atol=1e-12 * magnitude * (1.0 + norm(q)) * 4,
    )


def test_solve_identity_returns_target(load_fixture, rng):
    r = random_quaternion(rng)
    assert_quaternion_close(solve(load_fixture("identity.json"), r), r, atol=1e-15)


def test_solve_conjugation_is_an_involution(load_fixture):
    q = solve(load_fixture("conjugation.json"), Quaternion(1, 1, 0, 0))
    assert_quaternion_close(q, Quaternion(1, -1, 0, 0), atol=1e-15)


def test_solve_real_scaling():
    f = GeneralLinearFunction.from_pairs([(2.0 * ONE, ONE)])
    assert_quaternion_close(solve(f, 4.0 * J), 2.0 * J, atol=1e-15)


def test_solve_general_function_has_small_residual(rng):
    f = random_terms(rng, 4)
    r = random_quaternion(rng)
    q = solve(f, r)
    assert residual_norm(f, q, r) < 1e-10


def test_solve_singular_function_raises(load_fixture):
    with pytest.raises(SingularFunctionError):
        solve(load_fixture("zero.json"), ONE)

    # q i - i q kills the scalar and i components
    commutator = GeneralLinearFunction.from_pairs([(ONE, I), (-1.0 * I, ONE)])
    with pytest.raises(SingularFunctionError):
        solve(commutator, ONE)


def test_functions_equal_ignores_term_order(load_fixture):
    assert functions_equal(
        load_fixture("sum_of_basis_terms.json"), load_fixture("sum_of_basis_terms_shuffled.json")
    )


def test_iqj_and_jqi_differ(load_fixture):
    f = load_fixture("iqj.json")
    g = load_fixture("jqi.json")

    assert not functions_equal(f, g)
    assert matrix_difference(f, g) == 1.0
    # ij = k, ji = -k
    assert evaluate(f, ONE) == K
    assert evaluate(g, ONE) == -K


def test_function_equals_its_canonic_re_expression(rng):
    f = random_terms(rng, 10)
    assert functions_equal(f, to_function(canonic_left(function_matrix(f))))


@given(functions)
def test_equality_matches_agreement_on_the_basis(f):
    magnitude = 1.0 + sum(norm(t.left) * norm(t.right) for t in f.terms)
    tol = 1e-12 * magnitude

    reordered = GeneralLinearFunction(tuple(reversed(f.terms)))
    assert functions_equal(f, reordered, tol=tol)
    for e in BASIS:
        assert_quaternion_close(evaluate(f, e), evaluate(reordered, e), atol=tol)

    extended = f.concat(GeneralLinearFunction.from_pairs([(I, J)]))
    assert not functions_equal(f, extended, tol=tol)
    differences = [
        np.max(np.abs(as_vector(evaluate(f, e)) - as_vector(evaluate(extended, e))))
        for e in BASIS
    ]
    assert max(differences) > tol


def test_equality_tolerance_is_relative_to_magnitude():
    big = GeneralLinearFunction.from_pairs([(1e6 * ONE, ONE)])
    nudged = GeneralLinearFunction.from_pairs([((1e6 + 1e-7) * ONE, ONE)])

    assert functions_equal(big, nudged)
    assert not functions_equal(big, nudged, tol=0.0)


def test_negative_tolerance_is_rejected(load_fixture):
    f = load_fixture("identity.json")
    with pytest.raises(ValueError, match="tol"):
        functions_equal(f, f, tol=-1.0)
