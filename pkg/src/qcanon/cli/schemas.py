from typing import Optional

from pydantic import BaseModel, ConfigDict

from qcanon.storage.documents import Components


class FormSchema(BaseModel):
    """
    One representation of a function: its kind, the quaternion coefficients
    keyed by role (A, B, C, D or A, b, v1, ...) and its real coefficient count.
    """

    kind: str
    coefficients: dict[str, Components]
    real_coefficients: int

    model_config = ConfigDict(frozen=True)


class ResultDocument(BaseModel):
    """
    Output of one CLI command. Fields that do not apply to the command are None
    and left out of the rendered document.
    """

    kind: str
    coefficients: Optional[dict[str, Components]] = None
    real_coefficients: Optional[int] = None
    matrix: Optional[list[list[float]]] = None
    rank: Optional[int] = None
    singular_values: Optional[list[float]] = None

    # eval / solve
    value: Optional[Components] = None
    residual_norm: Optional[float] = None

    # equal
    equal: Optional[bool] = None
    max_difference: Optional[float] = None
    tolerance: Optional[float] = None

    model_config = ConfigDict(frozen=True)


class FormsDocument(BaseModel):
    kind: str = "forms"
    matrix: list[list[float]]
    rank: int
    singular_values: list[float]
    forms: list[FormSchema]

    model_config = ConfigDict(frozen=True)


class MatrixReportSchema(BaseModel):
    matrix: list[list[float]]
    rank: int
    lower_block_rank: int
    singular_values: list[float]

    model_config = ConfigDict(frozen=True)


class MeisterDemoDocument(BaseModel):
    kind: str = "meister-demo"
    seed: int
    meister_coefficients: dict[str, Components]
    meister: MatrixReportSchema
    extended: MatrixReportSchema
    general: MatrixReportSchema
    representable: bool
    verdict: str

    model_config = ConfigDict(frozen=True)
