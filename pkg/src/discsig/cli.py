"""Command-line front end: compute, export and cross-verify signature data.

Exit status contract: 0 = success / verified, 1 = verification mismatch,
2 = usage error.  All output is JSON with sorted keys, so identical
invocations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .cartesian import (
    CartesianField,
    cartesianize,
    diff_fields,
    field_from_word_polynomials,
)
from .montecarlo import SimConfig, mc_compare, simulate_exit_signature
from .pde import pde_hierarchy
from .recurrence import SeriesKernel, leading_coefficient, run_pipeline


class UsageError(ValueError):
    pass


def _resolve_point(args) -> tuple[float, float] | None:
    if getattr(args, "point", None) is not None and getattr(args, "polar", None) is not None:
        raise UsageError("give either --point or --polar, not both")
    if getattr(args, "point", None) is not None:
        return (args.point[0], args.point[1])
    if getattr(args, "polar", None) is not None:
        r, theta = args.polar
        return (r * math.cos(theta), r * math.sin(theta))
    return None


def _emit(doc: dict, out_path: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    point = _resolve_point(args)
    data = run_pipeline(args.level)
    field = cartesianize(data.radial_table, args.level)
    doc = {
        "command": "compute",
        "level": args.level,
        "cartesian_field": field.to_json_list(),
    }
    if point is not None:
        if point[0] ** 2 + point[1] ** 2 > 1.0 + 1e-9:
            raise UsageError("evaluation point must lie in the closed unit disc")
        doc["point_evaluation"] = field.evaluate(point).to_json_dict()
    _emit(doc, args.out)
    return 0


def cmd_leading(args) -> int:
    kernel = SeriesKernel(args.level)
    doc = {
        "command": "leading",
        "level": args.level,
        "terms": [
            {"n": n, "series": leading_coefficient(n, kernel).to_json_dict()}
            for n in range(args.level + 1)
        ],
    }
    _emit(doc, args.out)
    return 0


def cmd_verify_pde(args) -> int:
    data = run_pipeline(args.level)
    field = cartesianize(data.radial_table, args.level)
    oracle = field_from_word_polynomials(pde_hierarchy(args.level), args.level)
    if args.inject_fault:
        levels = {
            i: {mono: dict(words) for mono, words in monos.items()}
            for i, monos in oracle.levels.items()
        }
        words = levels.setdefault(0, {}).setdefault((0, 0), {})
        words[""] = words.get("", 0) + 1
        oracle = CartesianField(args.level, levels)
    diffs = diff_fields(field, oracle)
    doc = {
        "command": "verify-pde",
        "level": args.level,
        "equal": not diffs,
        "differences": diffs,
    }
    _emit(doc, args.out)
    return 0 if not diffs else 1


def cmd_verify_mc(args) -> int:
    point = _resolve_point(args) or (0.5, 0.0)
    if point[0] ** 2 + point[1] ** 2 >= 1.0:
        raise UsageError("start point must lie strictly inside the unit disc")
    data = run_pipeline(args.level)
    field = cartesianize(data.radial_table, args.level)
    exact = field.evaluate(point)
    cfg = SimConfig(
        start=point, dt=args.dt, paths=args.paths, level=args.level, seed=args.seed
    )
    report = mc_compare(simulate_exit_signature(cfg), exact.values, args.sigmas)
    doc = {"command": "verify-mc", "level": args.level, **report}
    _emit(doc, args.out)
    return 0 if report["flagged"] == 0 else 1


def cmd_export(args) -> int:
    data = run_pipeline(args.level)
    field = cartesianize(data.radial_table, args.level)

    def table_json(table):
        return [
            {"n": n, "beta": b, "series": table[(n, b)].to_json_dict()}
            for (n, b) in sorted(table)
        ]

    doc = {
        "command": "export",
        "level": args.level,
        "boundary": data.boundary.to_json_list(),
        "raw_table": table_json(data.raw_table),
        "radial_table": table_json(data.radial_table),
        "radial_series": [
            {"n": n, "series": data.radial_series[n].to_json_dict()}
            for n in sorted(data.radial_series)
        ],
        "cartesian_field": field.to_json_list(),
    }
    _emit(doc, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discsig",
        description="Exact expected signature of planar Brownian motion up to "
        "first exit from the unit disc.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, default_level):
        p.add_argument("--level", type=int, default=default_level,
                       help="truncation level (tensor degree)")
        p.add_argument("--out", type=str, default=None, help="output path (default: stdout)")
        p.add_argument("--format", choices=["json"], default="json",
                       help="output format (json only)")

    def add_point(p):
        p.add_argument("--point", type=float, nargs=2, metavar=("X", "Y"),
                       help="evaluation point in Cartesian coordinates")
        p.add_argument("--polar", type=float, nargs=2, metavar=("R", "THETA"),
                       help="evaluation point in polar coordinates")

    p = sub.add_parser("compute", help="compute the exact Cartesian field")
    add_common(p, 4)
    add_point(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("leading", help="closed-form leading radial coefficients")
    add_common(p, 4)
    p.set_defaults(func=cmd_leading)

    p = sub.add_parser("verify-pde", help="cross-check against the PDE hierarchy solver")
    add_common(p, 6)
    p.add_argument("--inject-fault", action="store_true",
                   help="corrupt one oracle coefficient first (testing hook)")
    p.set_defaults(func=cmd_verify_pde)

    p = sub.add_parser("verify-mc", help="cross-check against Monte-Carlo simulation")
    add_common(p, 3)
    add_point(p)
    p.add_argument("--paths", type=int, default=200_000, help="number of simulated paths")
    p.add_argument("--dt", type=float, default=1e-4, help="time step of the simulation")
    p.add_argument("--seed", type=int, default=0, help="base RNG seed")
    p.add_argument("--sigmas", type=float, default=4.0,
                   help="z-score threshold for flagging a component")
    p.set_defaults(func=cmd_verify_mc)

    p = sub.add_parser("export", help="export all intermediate tables as JSON")
    add_common(p, 4)
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.level < 0:
        parser.error("--level must be >= 0")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
