"""
Command-line entry point.

    python -m quivermaps iterate --map f0 --which phi --point 1,1,1,2 --steps 2 --format csv
    python -m quivermaps verify --suite all --seed 7 --samples 200
    python -m quivermaps levelset --map f0 --P 2,3

Exit codes: 0 ok, 1 verification failure, 2 parse or arity error,
3 non-positive coordinate, 4 unwritable output path.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from quivermaps.closed_form.constants import k_constants
from quivermaps.config import (
    AVAILABLE_WHICH,
    get_available_maps,
    get_available_suites,
    get_orbit_config,
    get_verify_config,
)
from quivermaps.errors import (
    ArityMismatch,
    NonPositiveCoordinate,
    NotInS,
    QuiverMapError,
)
from quivermaps.invariants.levelsets import level_set_report
from quivermaps.invariants.varieties import classify_variety
from quivermaps.maps.registry import arity_of, resolve_map, resolve_which
from quivermaps.numeric.scalar import format_scalar, parse_scalar_list
from quivermaps.orbit.engine import run_orbit
from quivermaps.schema import Point, VerifyReport
from quivermaps.utils.export import create_csv_text, create_json_text, create_plot_csv_text
from quivermaps.utils.logging import setup_logging
from quivermaps.verify.pipeline import run_verification

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NONPOSITIVE = 3
EXIT_OUTPUT = 4


def parse_point(text: str, arity: int, flag: str = "--point") -> Point:
    values = parse_scalar_list(text)
    if len(values) != arity:
        raise ArityMismatch(f"{flag} needs {arity} coordinates, got {len(values)}")
    for idx, value in enumerate(values, start=1):
        if value <= 0:
            raise NonPositiveCoordinate(f"{flag}: coordinate x{idx} = {value} is not positive")
    return Point(coords=values)


def format_point(p: Point) -> str:
    return ",".join(format_scalar(c) for c in p.coords)


def _point_arity(map_name: str, which: str) -> int:
    return arity_of(resolve_map(map_name)) if resolve_which(which) == "phi" else 2


def _default_steps(which: str) -> int:
    cfg = get_orbit_config()
    return cfg["phi_steps"] if resolve_which(which) == "phi" else cfg["periodic_steps"]


def _check_steps(steps: int) -> None:
    limit = get_orbit_config()["max_steps"]
    if steps < 0 or steps > limit:
        raise QuiverMapError(f"--steps must be in 0..{limit}, got {steps}")


def _orbit_from_args(args: argparse.Namespace):
    steps = _default_steps(args.which) if args.steps is None else args.steps
    _check_steps(steps)
    x0 = parse_point(args.point, _point_arity(args.map, args.which))
    return run_orbit(resolve_map(args.map), args.which, x0, steps)


def cmd_iterate(args: argparse.Namespace) -> int:
    run = _orbit_from_args(args)
    text = create_json_text(run) if args.format == "json" else create_csv_text(run)
    sys.stdout.write(text)
    return EXIT_OK


def _print_verify_table(report: VerifyReport) -> None:
    header = f"{'suite':<12} {'check':<40} {'total':>7} {'failed':>7} status"
    print(header)
    print("-" * len(header))
    for suite in report.suites:
        for check in suite.checks:
            status = "PASS" if check.passed else "FAIL"
            print(f"{suite.name:<12} {check.name:<40} {check.total:>7} {check.failures:>7} {status}")
    passed = sum(1 for suite in report.suites for check in suite.checks if check.passed)
    total = sum(len(suite.checks) for suite in report.suites)
    print(f"seed={report.seed} samples={report.samples} checks passed: {passed}/{total}")


def _first_counterexample(report: VerifyReport) -> Optional[str]:
    for suite in report.suites:
        for check in suite.checks:
            if not check.passed:
                return f"{suite.name}/{check.name}: {check.counterexample}"
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    if args.samples < 1:
        raise QuiverMapError(f"--samples must be >= 1, got {args.samples}")
    report = run_verification(args.suite, seed=args.seed, samples=args.samples, workers=args.workers)
    _print_verify_table(report)
    if report.passed:
        return EXIT_OK
    print(f"first counterexample: {_first_counterexample(report)}")
    return EXIT_FAILED


def cmd_classify(args: argparse.Namespace) -> int:
    map_id = resolve_map(args.map)
    x = parse_point(args.point, arity_of(map_id))
    anchor = parse_point(args.P, 2, flag="--P")
    try:
        sheet = classify_variety(map_id, x, anchor)
    except NotInS as exc:
        print(f"not in S: {exc}")
        return EXIT_FAILED
    print(f"sheet: {sheet}")
    return EXIT_OK


def cmd_levelset(args: argparse.Namespace) -> int:
    map_id = resolve_map(args.map)
    anchor = parse_point(args.P, 2, flag="--P")
    report = level_set_report(map_id, anchor[0], anchor[1])
    print(f"points: {len(report.points)}")
    for p in report.points:
        print(f"  {format_point(p)}")
    print("orbit P: " + " -> ".join(f"({format_point(p)})" for p in report.orbit_anchor))
    print("orbit sigma(P): " + " -> ".join(f"({format_point(p)})" for p in report.orbit_reflected))
    print(f"jacobian: {format_scalar(report.jacobian)}")
    print(f"case: {report.case}")
    return EXIT_OK if report.consistent else EXIT_FAILED


def cmd_constants(args: argparse.Namespace) -> int:
    map_id = resolve_map(args.map)
    a, b = parse_point(args.ab, 2, flag="--ab").coords
    k = k_constants(map_id, a, b)
    print(f"k1: {format_scalar(k.k1)}")
    print(f"k2: {format_scalar(k.k2)}")
    print(f"inequalities: {'hold' if k.inequalities_hold() else 'fail'}")
    return EXIT_OK


def cmd_export_plot(args: argparse.Namespace) -> int:
    run = _orbit_from_args(args)
    text = create_plot_csv_text(run)
    try:
        Path(args.out).write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    print(f"wrote {len(run.records)} rows to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    verify_cfg = get_verify_config()
    parser = argparse.ArgumentParser(prog="quivermaps", description="Exact dynamics of the F0 and dP3 quiver maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_orbit_flags(p: argparse.ArgumentParser, default_format: bool = True) -> None:
        p.add_argument("--map", choices=get_available_maps(), required=True)
        p.add_argument("--which", choices=AVAILABLE_WHICH, default="phi")
        p.add_argument("--point", required=True, help="Comma separated rationals, e.g. 1,1/2,3,4")
        p.add_argument("--steps", type=int, default=None)
        if default_format:
            p.add_argument("--format", choices=["csv", "json"], default="csv")

    p_iter = sub.add_parser("iterate", help="Print an orbit, one record per step.")
    add_orbit_flags(p_iter)
    p_iter.set_defaults(handler=cmd_iterate)

    p_verify = sub.add_parser("verify", help="Run exact-identity verification suites.")
    p_verify.add_argument("--suite", choices=[*get_available_suites(), "all"], default="all")
    p_verify.add_argument("--seed", type=int, default=verify_cfg["seed"])
    p_verify.add_argument("--samples", type=int, default=verify_cfg["samples"])
    p_verify.add_argument("--workers", type=int, default=verify_cfg["workers"])
    p_verify.set_defaults(handler=cmd_verify)

    p_classify = sub.add_parser("classify", help="Sheet index of a point in S_P.")
    p_classify.add_argument("--map", choices=get_available_maps(), required=True)
    p_classify.add_argument("--point", required=True)
    p_classify.add_argument("--P", required=True)
    p_classify.set_defaults(handler=cmd_classify)

    p_level = sub.add_parser("levelset", help="Level set of the psi integrals through P.")
    p_level.add_argument("--map", choices=get_available_maps(), default="f0")
    p_level.add_argument("--P", required=True)
    p_level.set_defaults(handler=cmd_levelset)

    p_const = sub.add_parser("constants", help="k1, k2 on C(a,b).")
    p_const.add_argument("--map", choices=get_available_maps(), required=True)
    p_const.add_argument("--ab", required=True)
    p_const.set_defaults(handler=cmd_constants)

    p_plot = sub.add_parser("export-plot", help="Write log10 plot data for an orbit.")
    add_orbit_flags(p_plot, default_format=False)
    p_plot.add_argument("--out", required=True)
    p_plot.set_defaults(handler=cmd_export_plot)
    return parser


VALUE_FLAGS = ("--point", "--P", "--ab")


def join_value_flags(argv: Sequence[str]) -> List[str]:
    """Glue point flags to their value so a leading minus sign is not read as an option."""
    joined: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in VALUE_FLAGS and i + 1 < len(argv):
            joined.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        joined.append(token)
        i += 1
    return joined


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(join_value_flags(argv))
    try:
        return args.handler(args)
    except NonPositiveCoordinate as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONPOSITIVE
    except QuiverMapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
