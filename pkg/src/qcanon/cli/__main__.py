from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Sequence, TextIO

from qcanon.cli.commands import (
    EXIT_INTERNAL,
    EXIT_PARSE,
    EXIT_SINGULAR,
    cmd_canonize,
    cmd_equal,
    cmd_eval,
    cmd_forms,
    cmd_meister_demo,
    cmd_minimize,
    cmd_random,
    cmd_solve,
)
from qcanon.config.settings import Settings
from qcanon.domain.errors import DocumentError, QcanonError, SingularFunctionError
from qcanon.domain.quaternion import Quaternion
from qcanon.processing.analysis_service import SIDES, FunctionAnalysisService
from qcanon.storage.documents import MAX_COMPONENT
from qcanon.utils.logging import get_logger, setup_logging_from_settings

logger = get_logger("qcanon.cli")


def _parse_quaternion(string: str) -> Quaternion:
    parts = [part.strip() for part in string.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("quaternion must be 'w,x,y,z'")
    try:
        q = Quaternion(*(float(part) for part in parts))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid quaternion {string!r}: {e}") from e
    if max(abs(q.w), abs(q.x), abs(q.y), abs(q.z)) > MAX_COMPONENT:
        raise argparse.ArgumentTypeError(
            f"quaternion components must lie within +-{MAX_COMPONENT:g}, got {string!r}"
        )
    return q


def _non_negative_int(string: str) -> int:
    value = int(string)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _non_negative_float(string: str) -> float:
    value = float(string)
    if not math.isfinite(value) or value < 0:
        raise argparse.ArgumentTypeError(f"must be a finite number >= 0, got {string!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qcanon",
        description="Canonic forms and minimal decompositions of linear quaternion functions.",
    )
    p.add_argument("--json", action="store_true", help="Emit structured JSON documents")
    p.add_argument("--log-level", type=str, default=None, help="Override QCANON_LOG_LEVEL")
    sub = p.add_subparsers(dest="cmd", required=True)

    canonize = sub.add_parser("canonize", help="Reduce a function to a canonic form")
    canonize.add_argument("input", type=str, help="Function document path, or '-' for stdin")
    canonize.add_argument("--side", choices=SIDES, default="left")

    forms = sub.add_parser("forms", help="Print every canonic form and the minimal decomposition")
    forms.add_argument("input", type=str)

    minimize = sub.add_parser("minimize", help="Decompose into at most four double-sided terms")
    minimize.add_argument("input", type=str)

    ev = sub.add_parser("eval", help="Evaluate f(q)")
    ev.add_argument("input", type=str)
    ev.add_argument("--q", type=_parse_quaternion, required=True, help="w,x,y,z")

    sv = sub.add_parser("solve", help="Solve f(q) = r for q")
    sv.add_argument("input", type=str)
    sv.add_argument("--r", type=_parse_quaternion, required=True, help="w,x,y,z")

    eq = sub.add_parser("equal", help="Compare two functions by their coefficient matrices")
    eq.add_argument("input_a", type=str)
    eq.add_argument("input_b", type=str)
    eq.add_argument("--tol", type=_non_negative_float, default=None, help="Relative tolerance")

    rnd = sub.add_parser("random", help="Write a seeded random function document")
    rnd.add_argument("--terms", type=_non_negative_int, required=True)
    rnd.add_argument("--seed", type=int, required=True)
    rnd.add_argument("--out", type=str, required=True, help="Output path, or '-' for stdout")

    demo = sub.add_parser("meister-demo", help="Show that Aq + qB + CqD is not canonic")
    demo.add_argument("--seed", type=int, required=True)

    return p


def _dispatch(args: argparse.Namespace, service: FunctionAnalysisService, out: TextIO) -> int:
    as_json = args.json

    if args.cmd == "canonize":
        return cmd_canonize(service, args.input, args.side, as_json=as_json, out=out)
    if args.cmd == "forms":
        return cmd_forms(service, args.input, as_json=as_json, out=out)
    if args.cmd == "minimize":
        return cmd_minimize(service, args.input, as_json=as_json, out=out)
    if args.cmd == "eval":
        return cmd_eval(service, args.input, args.q, as_json=as_json, out=out)
    if args.cmd == "solve":
        return cmd_solve(service, args.input, args.r, as_json=as_json, out=out)
    if args.cmd == "equal":
        return cmd_equal(
            service, args.input_a, args.input_b, args.tol, as_json=as_json, out=out
        )
    if args.cmd == "random":
        return cmd_random(service, args.terms, args.seed, Path(args.out), out=out)
    if args.cmd == "meister-demo":
        return cmd_meister_demo(service, args.seed, as_json=as_json, out=out)

    raise ValueError(f"Unknown command {args.cmd!r}")


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    settings = Settings()
    if args.log_level:
        settings = settings.model_copy(update={"log_level": args.log_level})
    setup_logging_from_settings(settings)

    service = FunctionAnalysisService(settings=settings)

    try:
        return _dispatch(args, service, sys.stdout)
    except DocumentError as e:
        for diagnostic in e.diagnostics:
            print(f"{e.source}: {diagnostic}", file=sys.stderr)
        return EXIT_PARSE
    except SingularFunctionError:
        print("function is singular", file=sys.stderr)
        return EXIT_SINGULAR
    except (OSError, QcanonError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception:
        logger.exception(f"Unexpected failure in command {args.cmd!r}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
