from __future__ import annotations

import math
from typing import Union

from qcanon.domain.models import (
    BilateralPair,
    CanonicFormLeft,
    CanonicFormRight,
    CoefficientMatrix,
    GeneralLinearFunction,
    MinimalDecomposition,
    MixedForm,
    PureBilateralForm,
    SvdFactors,
)
from qcanon.domain.quaternion import (
    BASIS,
    I,
    J,
    K,
    ONE,
    PureQuaternion,
    Quaternion,
    from_vector,
    multiply,
    quaternion_sum,
)
from qcanon.processing.smallsvd import RANK_RTOL, rank_from_sigma, svd

Form = Union[
    CanonicFormLeft, CanonicFormRight, MixedForm, PureBilateralForm, MinimalDecomposition
]


def _column(m: CoefficientMatrix, c: int) -> Quaternion:
    return from_vector(m.entries[:, c])


def _row(m: CoefficientMatrix, r: int) -> Quaternion:
    return from_vector(m.entries[r, :])


def canonic_left(m: CoefficientMatrix) -> CanonicFormLeft:
    """
    Group M by columns: f(q) = Aq + Bqi + Cqj + Dqk with
    A = m11 + m21 i + m31 j + m41 k and so on for B, C, D.
    """
    return CanonicFormLeft(a=_column(m, 0), b=_column(m, 1), c=_column(m, 2), d=_column(m, 3))


def canonic_right(m: CoefficientMatrix) -> CanonicFormRight:
    """
    Group M by rows: f(q) = qA' + iqB' + jqC' + kqD' with
    A' = m11 + m12 i + m13 j + m14 k and so on for B', C', D'.
    """
    return CanonicFormRight(a=_row(m, 0), b=_row(m, 1), c=_row(m, 2), d=_row(m, 3))


def mixed_form(m: CoefficientMatrix) -> MixedForm:
    """
    First column as a full quaternion on the left, the rest of the first row as
    a pure quaternion on the right, and the lower 3x3 block split by columns.
    """
    e = m.entries
    return MixedForm(
        a=_column(m, 0),
        b=PureQuaternion.from_vector3(e[0, 1:]),
        v1=PureQuaternion.from_vector3(e[1:, 1]),
        v3=PureQuaternion.from_vector3(e[1:, 2]),
        v5=PureQuaternion.from_vector3(e[1:, 3]),
    )


def pure_bilateral_form(
    m: CoefficientMatrix,
    *,
    rtol: float = RANK_RTOL,
    factors: SvdFactors | None = None,
) -> PureBilateralForm:
    """
    As mixed_form, but the lower 3x3 block is factorized by its SVD into at
    most three outer products of pure quaternions. Each singular value is
    split as sqrt(sigma) onto both sides of its pair.

    Precomputed `factors` of the lower block may be passed in to skip the SVD.
    """
    e = m.entries
    if factors is None:
        factors = svd(m.lower_block)
    rank = rank_from_sigma(factors.sigma, rtol=rtol)

    pairs = []
    for k in range(rank):
        root = math.sqrt(float(factors.sigma[k]))
        pairs.append(
            BilateralPair(
                left=PureQuaternion.from_vector3(root * factors.u[:, k]),
                right=PureQuaternion.from_vector3(root * factors.v[:, k]),
            )
        )

    return PureBilateralForm(
        a=_column(m, 0), b=PureQuaternion.from_vector3(e[0, 1:]), pairs=tuple(pairs)
    )


def evaluate_canonic_left(cf: CanonicFormLeft, q: Quaternion) -> Quaternion:
    return quaternion_sum(
        [multiply(coeff, multiply(q, e)) for coeff, e in zip((cf.a, cf.b, cf.c, cf.d), BASIS)]
    )


def evaluate_canonic_right(cf: CanonicFormRight, q: Quaternion) -> Quaternion:
    return quaternion_sum(
        [multiply(multiply(e, q), coeff) for coeff, e in zip((cf.a, cf.b, cf.c, cf.d), BASIS)]
    )


def evaluate_mixed(mf: MixedForm, q: Quaternion) -> Quaternion:
    return quaternion_sum(
        [
            multiply(mf.a, q),
            multiply(q, mf.b.to_quaternion()),
            multiply(multiply(mf.v1.to_quaternion(), q), I),
            multiply(multiply(mf.v3.to_quaternion(), q), J),
            multiply(multiply(mf.v5.to_quaternion(), q), K),
        ]
    )


def evaluate_pure_bilateral(pf: PureBilateralForm, q: Quaternion) -> Quaternion:
    terms = [multiply(pf.a, q), multiply(q, pf.b.to_quaternion())]
    for pair in pf.pairs:
        terms.append(
            multiply(multiply(pair.left.to_quaternion(), q), pair.right.to_quaternion())
        )
    return quaternion_sum(terms)


def evaluate_minimal(md: MinimalDecomposition, q: Quaternion) -> Quaternion:
    return quaternion_sum([multiply(multiply(t.left, q), t.right) for t in md.terms])


def to_function(form: Form) -> GeneralLinearFunction:
    """Re-express any form as an explicit list of double-sided terms."""
    if isinstance(form, CanonicFormLeft):
        pairs = list(zip((form.a, form.b, form.c, form.d), BASIS))
    elif isinstance(form, CanonicFormRight):
        pairs = list(zip(BASIS, (form.a, form.b, form.c, form.d)))
    elif isinstance(form, MixedForm):
        pairs = [
            (form.a, ONE),
            (ONE, form.b.to_quaternion()),
            (form.v1.to_quaternion(), I),
            (form.v3.to_quaternion(), J),
            (form.v5.to_quaternion(), K),
        ]
    elif isinstance(form, PureBilateralForm):
        pairs = [(form.a, ONE), (ONE, form.b.to_quaternion())]
        pairs += [(p.left.to_quaternion(), p.right.to_quaternion()) for p in form.pairs]
    elif isinstance(form, MinimalDecomposition):
        return GeneralLinearFunction(form.terms)
    else:
        raise TypeError(f"Unsupported form type: {type(form).__name__}")
    return GeneralLinearFunction.from_pairs(pairs)


def real_coefficient_count(form: Form) -> int:
    """
    Number of real coefficients the form carries: 16 for the canonic forms,
    up to 25 for the pure bilateral form and up to 32 for a minimal decomposition.
    """
    if isinstance(form, (CanonicFormLeft, CanonicFormRight, MixedForm)):
        return 16
    if isinstance(form, PureBilateralForm):
        return 4 + 3 + 6 * len(form.pairs)
    if isinstance(form, MinimalDecomposition):
        return 8 * len(form.terms)
    raise TypeError(f"Unsupported form type: {type(form).__name__}")


def form_quaternions(form: Form) -> dict[str, Quaternion]:
    """Coefficients keyed by role, as printed in result documents."""
    if isinstance(form, (CanonicFormLeft, CanonicFormRight)):
        return {"A": form.a, "B": form.b, "C": form.c, "D": form.d}
    if isinstance(form, MixedForm):
        return {
            "A": form.a,
            "b": form.b.to_quaternion(),
            "v1": form.v1.to_quaternion(),
            "v3": form.v3.to_quaternion(),
            "v5": form.v5.to_quaternion(),
        }
    if isinstance(form, PureBilateralForm):
        out = {"A": form.a, "b": form.b.to_quaternion()}
        for n, pair in enumerate(form.pairs):
            out[f"v{2 * n + 1}"] = pair.left.to_quaternion()
            out[f"v{2 * n + 2}"] = pair.right.to_quaternion()
        return out
    if isinstance(form, MinimalDecomposition):
        out = {}
        for n, t in enumerate(form.terms):
            out["ABCD"[n]] = t.left
            out["EFGH"[n]] = t.right
        return out
    raise TypeError(f"Unsupported form type: {type(form).__name__}")
