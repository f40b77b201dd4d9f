"""Command-line front end.

Subcommands: compute, circuits, verify, count.  Inputs are files in the
JSON graph format or the signed Gauss code format; the format defaults
from the file extension (.json means graph, anything else gauss).

Exit codes: 0 success, 1 parse/usage error, 2 input not checkerboard-
colorable where a colorable-only method was requested, 3 verification
mismatch.

With --server URL the command is executed by a running HTTP service
instead of in-process; output and exit codes are identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import laurent, reports
from .activity import LETTER_WEIGHTS
from .euler import CircuitError
from .graphs import GraphFormatError, NotCheckerboardColorable
from .links import GaussFormatError

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_NOT_COLORABLE = 2
EXIT_MISMATCH = 3

# Deliberately wrong weight for the live internal letter; lets the verify
# battery demonstrate a mismatch (negative control for exit code 3).
CORRUPT_WEIGHTS = {**LETTER_WEIGHTS, "L": laurent.monomial(3, -1)}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerx",
        description="Euler-circuit expansion polynomial and Jones-Kauffman polynomial calculator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", "-i", required=True, help="input file path")
        p.add_argument(
            "--format",
            choices=("graph", "gauss"),
            default=None,
            help="input format; default: graph for .json files, gauss otherwise",
        )
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument(
            "--max-n",
            type=int,
            default=20,
            help="refuse expansion beyond this vertex/crossing count (default 20)",
        )
        p.add_argument("--server", default=None, help="delegate to a running service at this URL")

    p_compute = sub.add_parser("compute", help="compute the polynomial (and f_L for diagrams)")
    common(p_compute)
    p_compute.add_argument(
        "--method",
        choices=("expansion", "skein", "bracket", "all"),
        default="expansion",
        help="computation method (bracket requires gauss input)",
    )

    p_circuits = sub.add_parser("circuits", help="list Euler circuits with activities and weights")
    common(p_circuits)

    p_verify = sub.add_parser("verify", help="cross-check all methods and invariances")
    common(p_verify)
    p_verify.add_argument("--seed", type=int, default=0, help="seed for the random relabelings")
    p_verify.add_argument("--corrupt-weights", action="store_true", help=argparse.SUPPRESS)

    p_count = sub.add_parser("count", help="circuit counts by enumeration and determinant")
    common(p_count)
    return parser


def _read_source(args) -> tuple[str, str]:
    path = Path(args.input)
    try:
        source = path.read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc
    fmt = args.format or ("graph" if path.suffix == ".json" else "gauss")
    return source, fmt


def _print_compute(report: dict) -> None:
    print(f"X = {report['x']}")
    if report["writhe"] is not None:
        print(f"w = {report['writhe']}")
        print(f"f_L = {report['jones']}")


def _print_circuits(report: dict) -> None:
    for row in report["circuits"]:
        word = row["word"] or "(circle)"
        print(f"{word}  |  {row['activity']}  |  {row['weight']}")
    print(f"X = {report['x']}")


def _print_verify(report: dict) -> None:
    for name, value in report["methods"].items():
        print(f"{name} = {value}")
    print(f"relabelings: {report['relabelings']} OK")
    print("coloring flip: OK")
    print("OK")


def _print_count(report: dict) -> None:
    print(f"n = {report['n']}")
    print(f"components = {report['components']}")
    print(f"circuits = {report['circuits']}")
    print(f"best = {report['best']}")
    if "one_loop_states" in report:
        print(f"one_loop_states = {report['one_loop_states']}")


def _run_remote(args, source: str, fmt: str) -> int:
    import httpx

    payload: dict = {"source": source, "format": fmt, "max_n": args.max_n}
    if args.command == "compute":
        payload["method"] = args.method
    elif args.command == "verify":
        payload["seed"] = args.seed
    response = httpx.post(f"{args.server.rstrip('/')}/{args.command}", json=payload)
    if response.status_code == 400:
        print(f"error: {response.json()['detail']}", file=sys.stderr)
        return EXIT_PARSE
    if response.status_code == 409:
        print(f"error: {response.json()['detail']}", file=sys.stderr)
        return EXIT_NOT_COLORABLE
    response.raise_for_status()
    report = response.json()
    if args.command == "verify" and not report.get("ok", False):
        print(json.dumps(report))
        return EXIT_MISMATCH
    if args.json:
        print(json.dumps(report))
    else:
        {
            "compute": _print_compute,
            "circuits": _print_circuits,
            "verify": _print_verify,
            "count": _print_count,
        }[args.command](report)
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        source, fmt = _read_source(args)
        if args.server:
            return _run_remote(args, source, fmt)
        if args.command == "compute":
            report = reports.compute_report(source, fmt, method=args.method, max_n=args.max_n)
            printer = _print_compute
        elif args.command == "circuits":
            report = reports.compute_report(
                source, fmt, method="expansion", include_circuits=True, max_n=args.max_n
            )
            printer = _print_circuits
        elif args.command == "verify":
            weights = CORRUPT_WEIGHTS if args.corrupt_weights else None
            report = reports.verify_report(
                source, fmt, seed=args.seed, max_n=args.max_n, weights=weights
            )
            printer = _print_verify
        else:
            report = reports.count_report(source, fmt, max_n=args.max_n)
            printer = _print_count
        if args.json:
            print(json.dumps(report))
        else:
            printer(report)
        return EXIT_OK
    except reports.VerifyMismatch as exc:
        print(json.dumps(exc.report))
        return EXIT_MISMATCH
    except NotCheckerboardColorable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_COLORABLE
    except (GraphFormatError, GaussFormatError, CircuitError, reports.BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
