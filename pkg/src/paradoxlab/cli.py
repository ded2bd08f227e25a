"""Command-line front door.

    paradoxlab <paradox> [--model M] [--R x] [--lambda x] [--omega-deg x]
                         [--a x] [--n k] [--upper x] [--k j] [--rho x]
                         [--steps k] [--format json|svg|table] [--out PATH]
    paradoxlab serve --port P

Exit codes: 0 success, 2 usage/unknown paradox, 3 invalid parameter,
4 unwritable output path, 5 oracle tolerance violation.  Failures print a
machine-readable JSON error object to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from paradoxlab import runner
from paradoxlab._kernels import BACKEND
from paradoxlab.closedform import format_human
from paradoxlab.errors import OracleMismatchError, PreconditionError
from paradoxlab.staircase import InexactLength
from paradoxlab.wire import IterationReport, dumps_pretty, report_to_json

EXIT_USAGE = 2
EXIT_INVALID_PARAMETER = 3
EXIT_UNWRITABLE_PATH = 4
EXIT_ORACLE_MISMATCH = 5


def _emit_error(code: str, message: str, precondition: Optional[str] = None) -> None:
    payload = {"error": {"code": code, "message": message}}
    if precondition:
        payload["error"]["precondition"] = precondition
    print(json.dumps(payload), file=sys.stderr)


def _closed_form_text(report: IterationReport) -> str:
    closed = report.closed_form
    if closed is None:
        return "-"
    if isinstance(closed, InexactLength):
        return f"~{closed.value:.12g} (inexact)"
    return format_human(closed)


def _table(reports: List[IterationReport]) -> str:
    headers = ["n", "closed form", "float", "oracle", "|Δ|", "sup-distance"]
    rows = []
    for rep in reports:
        delta = (
            abs(rep.float_value - rep.oracle_value)
            if rep.oracle_value is not None
            else None
        )
        rows.append(
            [
                str(rep.n),
                _closed_form_text(rep),
                f"{rep.float_value:.12g}",
                f"{rep.oracle_value:.12g}" if rep.oracle_value is not None else "-",
                f"{delta:.3g}" if delta is not None else "-",
                f"{rep.sup_distance:.6g}" if rep.sup_distance is not None else "-",
            ]
        )
    widths = [
        max(len(headers[col]), *(len(row[col]) for row in rows))
        for col in range(len(headers))
    ]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)),
        "  ".join("-" * w for w in widths),
    ]
    lines.extend(
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)) for row in rows
    )
    lines.append("")
    lines.append(f"verdict: {reports[-1].verdict}")
    return "\n".join(lines) + "\n"


def _render(request: runner.RunRequest, samples: Optional[int]) -> str:
    if request.output == "svg":
        # SVG renders the geometry; run the reports anyway so a tolerance
        # violation still refuses success.
        runner.run(request, samples=samples)
        return runner.render_svg(request.paradox, request.params)
    reports = runner.run(request, samples=samples)
    if request.output == "table":
        return _table(reports)
    return dumps_pretty([report_to_json(r) for r in reports]) + "\n"


def _write_output(text: str, out_path: Optional[str]) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    try:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise _Unwritable(str(exc)) from exc


class _Unwritable(Exception):
    pass


def _add_paradox_parsers(subparsers) -> None:
    staircase = subparsers.add_parser(
        "staircase", help="the five segment-length models"
    )
    staircase.add_argument(
        "--model",
        default="semicircle",
        help="semicircle | iso-right | lambda | equilateral | bisect",
    )
    staircase.add_argument("--R", type=float, default=None, help="half base length")
    staircase.add_argument("--n", type=int, default=None, help="iterations (series 1..n)")
    staircase.add_argument(
        "--lambda", dest="lam", type=float, default=None, help="leg ratio (lambda model)"
    )
    staircase.add_argument(
        "--omega-deg", type=float, default=None, help="base angle in degrees (bisect)"
    )

    koch = subparsers.add_parser("koch", help="Koch snowflake perimeter and area")
    koch.add_argument("--a", type=float, default=None, help="initial side length")
    koch.add_argument("--n", type=int, default=None, help="refinement steps (series 0..n)")

    horn = subparsers.add_parser("horn", help="Gabriel's horn integrals")
    horn.add_argument("--upper", type=float, default=None, help="truncation point A")
    horn.add_argument("--steps", type=int, default=None, help="quadrature subdivisions")

    dissection = subparsers.add_parser(
        "dissection", help="missing square and 64=65, exact-rational"
    )
    dissection.add_argument(
        "--k", type=int, default=None, help="Fibonacci index for the generalized case"
    )

    wheel = subparsers.add_parser("wheel", help="Aristotle's wheel traces and slip")
    wheel.add_argument("--R", type=float, default=None, help="outer radius")
    wheel.add_argument("--rho", type=float, default=None, help="inner radius")
    wheel.add_argument("--steps", type=int, default=None, help="trace samples")

    for sub in (staircase, koch, horn, dissection, wheel):
        sub.add_argument(
            "--format", choices=("json", "svg", "table"), default="table"
        )
        sub.add_argument("--out", default=None, help="write output to this path")
        sub.add_argument(
            "--samples",
            type=int,
            default=None,
            help="oracle sampling density per primitive (default 256, "
            "or PARADOXLAB_SAMPLES)",
        )

    serve = subparsers.add_parser("serve", help="read-only local HTTP API")
    serve.add_argument("--port", type=int, default=8765)
    serve.add_argument("--host", default="127.0.0.1")


def _collect_params(args: argparse.Namespace) -> dict:
    mapping = {
        "model": "model",
        "R": "R",
        "n": "n",
        "lam": "lambda",
        "omega_deg": "omega_deg",
        "a": "a",
        "upper": "upper",
        "steps": "steps",
        "k": "k",
        "rho": "rho",
    }
    params = {}
    for attr, name in mapping.items():
        value = getattr(args, attr, None)
        if value is not None:
            params[name] = value
    return params


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="paradoxlab",
        description="construct, measure, and refute geometric limit paradoxes "
        f"(kernel backend: {BACKEND})",
    )
    subparsers = parser.add_subparsers(dest="paradox", required=True)
    _add_paradox_parsers(subparsers)
    args = parser.parse_args(argv)

    if args.paradox == "serve":
        from paradoxlab.serve import serve

        serve(args.port, host=args.host)
        return 0

    request = runner.RunRequest(
        paradox=args.paradox,
        params=_collect_params(args),
        output=args.format,
        out_path=args.out,
    )
    try:
        text = _render(request, samples=args.samples)
        _write_output(text, request.out_path)
    except PreconditionError as exc:
        _emit_error("invalid-parameter", str(exc), exc.precondition)
        return EXIT_INVALID_PARAMETER
    except OracleMismatchError as exc:
        _emit_error("oracle-mismatch", str(exc))
        return EXIT_ORACLE_MISMATCH
    except _Unwritable as exc:
        _emit_error("unwritable-path", str(exc))
        return EXIT_UNWRITABLE_PATH
    return 0


if __name__ == "__main__":
    sys.exit(main())
