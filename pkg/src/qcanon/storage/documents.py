from __future__ import annotations

import json
import math
import sys
from pathlib import Path
from typing import Annotated, Any

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from qcanon.domain.errors import DocumentError
from qcanon.domain.models import GeneralLinearFunction, TermPair
from qcanon.domain.quaternion import Quaternion, from_vector

STDIO = "-"

# Largest accepted coefficient magnitude in a function document. Products of
# three such values stay far below the float64 overflow threshold.
MAX_COMPONENT = 1e100

FiniteFloat = Annotated[float, Field(allow_inf_nan=False)]
Components = Annotated[list[FiniteFloat], Field(min_length=4, max_length=4)]

BoundedFloat = Annotated[
    float, Field(allow_inf_nan=False, ge=-MAX_COMPONENT, le=MAX_COMPONENT)
]
TermComponents = Annotated[list[BoundedFloat], Field(min_length=4, max_length=4)]


class TermSchema(BaseModel):
    left: TermComponents
    right: TermComponents

    model_config = ConfigDict(frozen=True, extra="forbid")


class FunctionDocument(BaseModel):
    """
    Serialized linear quaternion function:
    {"terms": [{"left": [w, x, y, z], "right": [w, x, y, z]}, ...]}
    """

    terms: list[TermSchema]

    model_config = ConfigDict(frozen=True, extra="forbid")

    def to_function(self) -> GeneralLinearFunction:
        return GeneralLinearFunction(
            tuple(
                TermPair(left=from_vector(t.left), right=from_vector(t.right))
                for t in self.terms
            )
        )

    @classmethod
    def from_function(cls, f: GeneralLinearFunction) -> FunctionDocument:
        return cls(
            terms=[
                TermSchema(
                    left=quaternion_components(t.left),
                    right=quaternion_components(t.right),
                )
                for t in f.terms
            ]
        )


def quaternion_components(q: Quaternion) -> list[float]:
    return [float(q.w), float(q.x), float(q.y), float(q.z)]


def _format_float(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"Cannot serialize non-finite number {value}")
    return f"{value:.17g}"


def _is_scalar(value: Any) -> bool:
    return not isinstance(value, (list, tuple, dict))


def _render(value: Any, level: int, indent: int) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, str):
        return json.dumps(value)

    pad = " " * (indent * (level + 1))
    close = " " * (indent * level)

    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        # short rows of numbers stay on one line
        if all(_is_scalar(v) for v in value):
            return "[" + ", ".join(_render(v, level + 1, indent) for v in value) + "]"
        items = [pad + _render(v, level + 1, indent) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"

    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            pad + json.dumps(str(k)) + ": " + _render(v, level + 1, indent)
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"

    raise TypeError(f"Cannot serialize {type(value).__name__}")


def render_json(payload: Any, *, indent: int = 2) -> str:
    """
    Deterministic JSON text: keys in insertion order, every float with 17
    significant digits (lossless for doubles), trailing newline.
    """
    return _render(payload, 0, indent) + "\n"


def render_function(f: GeneralLinearFunction) -> str:
    return render_json(FunctionDocument.from_function(f).model_dump())


def _diagnostics(exc: ValidationError) -> list[str]:
    out = []
    for err in exc.errors():
        loc = ".".join(str(part) for part in err["loc"]) or "<document>"
        out.append(f"{loc}: {err['msg']}")
    return out


def parse_function(text: str, *, source: str | Path = "<string>") -> GeneralLinearFunction:
    """
    Parse a function document. Raises DocumentError naming the offending
    field path, or the line/column for malformed JSON.
    """
    try:
        doc = FunctionDocument.model_validate_json(text)
    except ValidationError as e:
        raise DocumentError(source, _diagnostics(e)) from e
    return doc.to_function()


def read_function(path: str | Path) -> GeneralLinearFunction:
    """Read a function document from `path`, or from stdin when path is "-"."""
    if str(path) == STDIO:
        source: str | Path = "<stdin>"
        data = sys.stdin.buffer.read()
    else:
        source = Path(path)
        data = source.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise DocumentError(source, [f"<document>: invalid UTF-8 at byte {e.start}"]) from e
    return parse_function(text, source=source)


def write_function(f: GeneralLinearFunction, path: str | Path) -> None:
    text = render_function(f)
    if str(path) == STDIO:
        sys.stdout.write(text)
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
