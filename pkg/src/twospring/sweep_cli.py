"""Command-line frontend for the two-spring design toolkit.

Subcommands: ``solve`` and ``classify`` for single weight pairs (JSON
records), ``sweep`` for phase-diagram grids and ``boundaries`` for region
dividing lines (CSV), and ``verify`` for randomized closed-form-vs-oracle
campaigns (JSON summary, nonzero exit on any disagreement).

Numbers are formatted with the shortest representation that round-trips, and
infinities print as the literal ``inf``, so identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .model import Topology, Weights
from .oracle import GridSpec, verify_reduction
from .regions import B2_SEGMENT_A_MAX, B2_SEGMENT_A_MIN, RegionLabel, Winner, b2_boundary, winner
from .solver import expand, solve_reduced

__all__ = [
    "SweepSpec",
    "PhaseCell",
    "phase_cells",
    "sweep_lines",
    "boundary_lines",
    "build_parser",
    "main",
    "EXIT_OK",
    "EXIT_DISAGREEMENT",
    "EXIT_USAGE",
    "EXIT_IO",
]

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_IO = 3

SWEEP_HEADER = "a,b,region,winner,cost_parallel,cost_serial"
BOUNDARY_HEADER = "curve,a,b"

_TOPOLOGIES = {"parallel": Topology.PARALLEL, "serial": Topology.SERIAL}


class UsageError(Exception):
    """Invalid argument values; maps to exit status 2."""


@dataclass(frozen=True)
class SweepSpec:
    """Inclusive rectangular sampling of the weight plane."""

    a_min: float
    a_max: float
    b_min: float
    b_max: float
    na: int
    nb: int

    def __post_init__(self) -> None:
        if not (0.0 <= self.a_min <= self.a_max) or not (0.0 <= self.b_min <= self.b_max):
            raise ValueError("need 0 <= a_min <= a_max and 0 <= b_min <= b_max")
        if self.na < 2 or self.nb < 2:
            raise ValueError("need at least 2 samples per axis")


@dataclass(frozen=True)
class PhaseCell:
    """One sweep sample: the winner report at a single weight pair."""

    a: float
    b: float
    label: RegionLabel
    winner: Winner
    cost_parallel: float
    cost_serial: float


def _fmt(x: float) -> str:
    # repr of a float is the shortest decimal that round-trips; inf -> 'inf'
    return repr(float(x))


def _jsonable(value):
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_jsonable(item) for item in value]
    return value


def _emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _emit_record(record: dict, out: str | None) -> None:
    _emit([json.dumps(_jsonable(record))], out)


def phase_cells(spec: SweepSpec) -> list[PhaseCell]:
    """Winner report at every sample, in row-major order (b outer, a inner)."""
    a_values = [float(a) for a in np.linspace(spec.a_min, spec.a_max, spec.na)]
    b_values = [float(b) for b in np.linspace(spec.b_min, spec.b_max, spec.nb)]
    cells = []
    for b in b_values:
        for a in a_values:
            report = winner(Weights(a, b))
            cells.append(
                PhaseCell(a, b, report.label, report.winner, report.cost_parallel, report.cost_serial)
            )
    return cells


def sweep_lines(spec: SweepSpec) -> list[str]:
    """CSV lines (header included) for a phase-diagram sweep."""
    lines = [SWEEP_HEADER]
    for cell in phase_cells(spec):
        lines.append(
            ",".join(
                (
                    _fmt(cell.a),
                    _fmt(cell.b),
                    cell.label.value,
                    cell.winner.value,
                    _fmt(cell.cost_parallel),
                    _fmt(cell.cost_serial),
                )
            )
        )
    return lines


def boundary_lines(resolution: int) -> list[str]:
    """CSV polylines for the three region boundaries.

    Emits the A/B line ``a + 2b = 1`` and the B/C line ``a + b = 1`` for
    ``a`` in [0, 1], plus the B1/B2 segment ``b = 2 - 4a`` between its
    intersections with those lines.
    """
    if resolution < 2:
        raise UsageError("resolution must be at least 2")
    lines = [BOUNDARY_HEADER]
    for a in np.linspace(0.0, 1.0, resolution):
        a = float(a)
        lines.append(f"a+2b=1,{_fmt(a)},{_fmt((1.0 - a) / 2.0)}")
    for a in np.linspace(0.0, 1.0, resolution):
        a = float(a)
        lines.append(f"a+b=1,{_fmt(a)},{_fmt(1.0 - a)}")
    for a in np.linspace(B2_SEGMENT_A_MIN, B2_SEGMENT_A_MAX, resolution):
        b = b2_boundary(float(a))
        if b is None:  # pragma: no cover - linspace stays inside the segment
            continue
        lines.append(f"b=2-4a,{_fmt(float(a))},{_fmt(b)}")
    return lines


def _weights_from(args: argparse.Namespace) -> Weights:
    if not (args.a >= 0.0) or not (args.b >= 0.0):
        raise UsageError("--a and --b must be nonnegative")
    return Weights(args.a, args.b)


def cmd_solve(args: argparse.Namespace) -> int:
    w = _weights_from(args)
    k = _TOPOLOGIES[args.topology]
    sol = solve_reduced(w, k)
    record = {
        "a": w.a,
        "b": w.b,
        "topology": args.topology,
        "feasible": sol.feasible,
        "x_star": sol.x_star,
        "c1_star": None,
        "c2_star": None,
        "total_cost": sol.total_cost,
        "active_constraint": sol.active_constraint.value if sol.active_constraint else None,
    }
    if sol.feasible:
        design = expand(sol, k)
        record["c1_star"] = design.c1_star
        record["c2_star"] = design.c2_star
    _emit_record(record, args.out)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    w = _weights_from(args)
    report = winner(w)
    record = {
        "a": w.a,
        "b": w.b,
        "region": report.label.value,
        "winner": report.winner.value,
        "cost_parallel": report.cost_parallel,
        "cost_serial": report.cost_serial,
    }
    _emit_record(record, args.out)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        spec = SweepSpec(args.a_min, args.a_max, args.b_min, args.b_max, args.na, args.nb)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(sweep_lines(spec), args.out)
    return EXIT_OK


def cmd_boundaries(args: argparse.Namespace) -> int:
    _emit(boundary_lines(args.na), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    if not args.tol > 0.0:
        raise UsageError("--tol must be positive")
    try:
        grid = GridSpec(args.c_max, args.step)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rng = np.random.default_rng(args.seed)
    points = rng.uniform(0.0, 1.5, size=(args.samples, 2))
    checks = 0
    agreements = 0
    truncated = 0
    worst_gap = 0.0
    failures = []
    for a, b in points:
        w = Weights(float(a), float(b))
        for name, k in _TOPOLOGIES.items():
            verdict = verify_reduction(w, k, grid, args.tol)
            checks += 1
            if verdict.agree:
                agreements += 1
                if verdict.status == "agree-truncated":
                    truncated += 1
                if math.isfinite(verdict.cost_gap):
                    worst_gap = max(worst_gap, abs(verdict.cost_gap))
            else:
                failures.append(
                    {
                        "a": w.a,
                        "b": w.b,
                        "topology": name,
                        "status": verdict.status,
                        "closed_cost": verdict.closed_cost,
                        "oracle_cost": verdict.oracle_cost,
                    }
                )
    summary = {
        "samples": args.samples,
        "seed": args.seed,
        "c_max": args.c_max,
        "step": args.step,
        "tol": args.tol,
        "checks": checks,
        "agreements": agreements,
        "disagreements": len(failures),
        "truncated": truncated,
        "worst_cost_gap": worst_gap,
        "failures": failures,
    }
    _emit_record(summary, args.out)
    return EXIT_OK if not failures else EXIT_DISAGREEMENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twospring",
        description="Cost-optimal two-spring network design: solve, classify, sweep, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="closed-form minimal-cost design for one weight pair")
    solve.add_argument("--a", type=float, required=True, help="weight on force capacity")
    solve.add_argument("--b", type=float, required=True, help="weight on resistance")
    solve.add_argument("--topology", choices=sorted(_TOPOLOGIES), required=True)
    solve.add_argument("--out", default=None, help="output path (default: stdout)")
    solve.set_defaults(handler=cmd_solve)

    classify = sub.add_parser("classify", help="region label and winning topology for one weight pair")
    classify.add_argument("--a", type=float, required=True)
    classify.add_argument("--b", type=float, required=True)
    classify.add_argument("--out", default=None)
    classify.set_defaults(handler=cmd_classify)

    sweep = sub.add_parser("sweep", help="phase-diagram CSV over a rectangle of weight pairs")
    sweep.add_argument("--a-min", type=float, default=0.0)
    sweep.add_argument("--a-max", type=float, default=1.2)
    sweep.add_argument("--b-min", type=float, default=0.0)
    sweep.add_argument("--b-max", type=float, default=1.2)
    sweep.add_argument("--na", type=int, default=121, help="samples along a (inclusive)")
    sweep.add_argument("--nb", type=int, default=121, help="samples along b (inclusive)")
    sweep.add_argument("--out", default=None)
    sweep.set_defaults(handler=cmd_sweep)

    boundaries = sub.add_parser("boundaries", help="region boundary polylines as CSV")
    boundaries.add_argument("--na", type=int, default=101, help="samples per polyline")
    boundaries.add_argument("--out", default=None)
    boundaries.set_defaults(handler=cmd_boundaries)

    verify = sub.add_parser("verify", help="randomized closed-form vs grid-oracle campaign")
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--c-max", type=float, default=6.0)
    verify.add_argument("--step", type=float, default=0.005)
    verify.add_argument("--tol", type=float, default=0.01)
    verify.add_argument("--out", default=None)
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
