from __future__ import annotations

from pathlib import Path
from typing import TextIO

from qcanon.cli.schemas import (
    FormSchema,
    FormsDocument,
    MatrixReportSchema,
    MeisterDemoDocument,
    ResultDocument,
)
from qcanon.domain.quaternion import Quaternion, format_quaternion
from qcanon.processing.analysis_service import (
    MEISTER_DEMO_TERMS,
    FunctionAnalysisService,
    MatrixSummary,
    MeisterDemoReport,
    Side,
)
from qcanon.processing.canonic_forms import Form, form_quaternions, real_coefficient_count
from qcanon.storage.documents import (
    STDIO,
    quaternion_components,
    read_function,
    render_json,
    write_function,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_SINGULAR = 3
EXIT_NOT_EQUAL = 4

FORM_KINDS = {
    "left": "canonic-left",
    "right": "canonic-right",
    "mixed": "mixed",
    "bilateral": "pure-bilateral",
    "minimal": "minimal",
}

FORM_EQUATIONS = {
    "left": "f(q) = Aq + Bqi + Cqj + Dqk",
    "right": "f(q) = qA + iqB + jqC + kqD",
    "mixed": "f(q) = Aq + qb + v1 q i + v3 q j + v5 q k",
    "bilateral": "f(q) = Aq + qb + v1 q v2 + v3 q v4 + v5 q v6",
    "minimal": "f(q) = AqE + BqF + CqG + DqH",
}


def _num(value: float) -> str:
    # + 0.0 folds -0.0 into 0.0
    return f"{value + 0.0:.6g}"


def _coefficients(form: Form) -> dict[str, list[float]]:
    return {role: quaternion_components(q) for role, q in form_quaternions(form).items()}


def _form_schema(kind: str, form: Form) -> FormSchema:
    return FormSchema(
        kind=FORM_KINDS[kind],
        coefficients=_coefficients(form),
        real_coefficients=real_coefficient_count(form),
    )


def _matrix_lines(matrix: list[list[float]]) -> list[str]:
    return ["  " + " ".join(f"{_num(v):>12}" for v in row) for row in matrix]


def _summary_lines(summary: MatrixSummary) -> list[str]:
    # values below the rank cutoff are rounding noise and print as 0
    sigma = [
        _num(s) if k < summary.rank else "0" for k, s in enumerate(summary.singular_values)
    ]
    return [
        "matrix M:",
        *_matrix_lines(summary.matrix.tolist()),
        f"rank: {summary.rank}",
        "singular values: " + ", ".join(sigma),
    ]


def _form_lines(kind: str, form: Form) -> list[str]:
    lines = [f"form: {FORM_KINDS[kind]}", FORM_EQUATIONS[kind]]
    lines += [f"{role} = {format_quaternion(q)}" for role, q in form_quaternions(form).items()]
    lines.append(f"real coefficients: {real_coefficient_count(form)}")
    return lines


def _write(out: TextIO, lines: list[str]) -> None:
    out.write("\n".join(lines) + "\n")


def cmd_canonize(
    service: FunctionAnalysisService,
    path: str | Path,
    side: Side,
    *,
    as_json: bool,
    out: TextIO,
) -> int:
    report = service.canonize(read_function(path), side)
    if as_json:
        doc = ResultDocument(
            kind=FORM_KINDS[side],
            coefficients=_coefficients(report.form),
            real_coefficients=real_coefficient_count(report.form),
            matrix=report.summary.matrix.tolist(),
            rank=report.summary.rank,
            singular_values=list(report.summary.singular_values),
        )
        out.write(render_json(doc.model_dump(exclude_none=True)))
    else:
        _write(out, _form_lines(side, report.form) + _summary_lines(report.summary))
    return EXIT_OK


def cmd_forms(
    service: FunctionAnalysisService, path: str | Path, *, as_json: bool, out: TextIO
) -> int:
    f = read_function(path)
    reports = service.all_forms(f)
    minimal = service.minimize(f)
    summary = minimal.summary

    if as_json:
        forms = [_form_schema(r.side, r.form) for r in reports]
        forms.append(_form_schema("minimal", minimal.decomposition))
        doc = FormsDocument(
            matrix=summary.matrix.tolist(),
            rank=summary.rank,
            singular_values=list(summary.singular_values),
            forms=forms,
        )
        out.write(render_json(doc.model_dump()))
        return EXIT_OK

    lines: list[str] = []
    for r in reports:
        lines += _form_lines(r.side, r.form) + [""]
    lines += _form_lines("minimal", minimal.decomposition) + [""]
    _write(out, lines + _summary_lines(summary))
    return EXIT_OK


def cmd_minimize(
    service: FunctionAnalysisService, path: str | Path, *, as_json: bool, out: TextIO
) -> int:
    report = service.minimize(read_function(path))
    decomposition = report.decomposition
    if as_json:
        doc = ResultDocument(
            kind=FORM_KINDS["minimal"],
            coefficients=_coefficients(decomposition),
            real_coefficients=real_coefficient_count(decomposition),
            matrix=report.summary.matrix.tolist(),
            rank=report.summary.rank,
            singular_values=list(report.summary.singular_values),
        )
        out.write(render_json(doc.model_dump(exclude_none=True)))
    else:
        lines = _form_lines("minimal", decomposition)
        lines.insert(2, f"terms: {len(decomposition)}")
        _write(out, lines + _summary_lines(report.summary))
    return EXIT_OK


def cmd_eval(
    service: FunctionAnalysisService,
    path: str | Path,
    q: Quaternion,
    *,
    as_json: bool,
    out: TextIO,
) -> int:
    value = service.evaluate(read_function(path), q)
    if as_json:
        doc = ResultDocument(kind="eval", value=quaternion_components(value))
        out.write(render_json(doc.model_dump(exclude_none=True)))
    else:
        _write(out, [f"f(q) = {format_quaternion(value)}"])
    return EXIT_OK


def cmd_solve(
    service: FunctionAnalysisService,
    path: str | Path,
    r: Quaternion,
    *,
    as_json: bool,
    out: TextIO,
) -> int:
    report = service.solve(read_function(path), r)
    if as_json:
        doc = ResultDocument(
            kind="solve",
            value=quaternion_components(report.q),
            residual_norm=report.residual_norm,
        )
        out.write(render_json(doc.model_dump(exclude_none=True)))
    else:
        _write(
            out,
            [f"q = {format_quaternion(report.q)}", f"residual: {report.residual_norm:.3e}"],
        )
    return EXIT_OK


def cmd_equal(
    service: FunctionAnalysisService,
    path_a: str | Path,
    path_b: str | Path,
    tol: float | None,
    *,
    as_json: bool,
    out: TextIO,
) -> int:
    report = service.compare(read_function(path_a), read_function(path_b), tol)
    if as_json:
        doc = ResultDocument(
            kind="equal",
            equal=report.equal,
            max_difference=report.max_difference,
            tolerance=report.tolerance,
        )
        out.write(render_json(doc.model_dump(exclude_none=True)))
    elif report.equal:
        _write(out, ["equal"])
    else:
        _write(out, [f"not equal (max matrix difference {report.max_difference:.6g})"])
    return EXIT_OK if report.equal else EXIT_NOT_EQUAL


def cmd_random(
    service: FunctionAnalysisService,
    terms: int,
    seed: int,
    out_path: str | Path,
    *,
    out: TextIO,
) -> int:
    f = service.random_function(terms, seed)
    write_function(f, out_path)
    if str(out_path) != STDIO:
        _write(out, [f"Wrote {terms}-term function (seed {seed}) to {out_path}"])
    return EXIT_OK


def _matrix_report(summary: MatrixSummary) -> MatrixReportSchema:
    return MatrixReportSchema(
        matrix=summary.matrix.tolist(),
        rank=summary.rank,
        lower_block_rank=summary.lower_block_rank,
        singular_values=list(summary.singular_values),
    )


def meister_verdict(report: MeisterDemoReport) -> list[str]:
    meister = report.meister_summary
    extended = report.extended_summary
    general = report.general_summary

    lines = []
    if report.representable:
        lines.append(
            f"Meister form rank {meister.rank} reaches general rank {general.rank}"
        )
    else:
        lines.append(
            f"Aq + qB + CqD has rank {meister.rank} < {general.rank}, "
            "so it cannot represent a general linear quaternion function"
        )
    if extended.lower_block_rank < general.lower_block_rank:
        lines.append(
            f"adding EqF leaves the lower 3x3 block at rank "
            f"{extended.lower_block_rank} < {general.lower_block_rank}, "
            "so Aq + qB + CqD + EqF is not canonic either"
        )
    return lines


def cmd_meister_demo(
    service: FunctionAnalysisService, seed: int, *, as_json: bool, out: TextIO
) -> int:
    report = service.meister_demo(seed)
    m = report.meister
    coefficients = {"A": m.a, "B": m.b, "C": m.c, "D": m.d}

    if as_json:
        doc = MeisterDemoDocument(
            seed=seed,
            meister_coefficients={k: quaternion_components(q) for k, q in coefficients.items()},
            meister=_matrix_report(report.meister_summary),
            extended=_matrix_report(report.extended_summary),
            general=_matrix_report(report.general_summary),
            representable=report.representable,
            verdict="; ".join(meister_verdict(report)),
        )
        out.write(render_json(doc.model_dump()))
        return EXIT_OK

    lines = [f"seed: {seed}", "Meister form f(q) = Aq + qB + CqD"]
    lines += [f"{role} = {format_quaternion(q)}" for role, q in coefficients.items()]
    lines += _summary_lines(report.meister_summary)
    lines += ["", "Meister form plus one term EqF"]
    lines += _summary_lines(report.extended_summary)
    lines.append(f"lower 3x3 block rank: {report.extended_summary.lower_block_rank}")
    lines += ["", f"general {MEISTER_DEMO_TERMS}-term function"]
    lines += _summary_lines(report.general_summary)
    lines.append(f"lower 3x3 block rank: {report.general_summary.lower_block_rank}")
    lines += [""] + [f"verdict: {v}" for v in meister_verdict(report)]
    _write(out, lines)
    return EXIT_OK
