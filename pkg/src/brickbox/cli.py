"""Command-line front end.

Subcommands: decide, split, tile, verify, spectral, counterexample, render.
Exit codes: 0 success, 1 negative answer (UNSAT / no certificate / failed
verification, with a JSON body), 2 invalid input, 3 budget exhaustion.
The solver node budget can also be set via BRICKBOX_NODE_BUDGET.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import serialization as ser
from .counterexample import (
    BudgetExhausted,
    make_instance,
    pinwheel_tiling,
    verify_no_proper_split,
)
from .exactcover import (
    DEFAULT_GRID_CAP,
    DEFAULT_NODE_BUDGET,
    SAT,
    TIMEOUT,
    GridTooLarge,
    build_cover_problem,
    build_grid,
    cover_matrix_text,
    exact_cover_tileable,
)
from .geometry import BoxSpec, Brick, Placement, Tiling, verify_tiling_geometric
from .render import tiling_to_svg
from .spectral import random_frequencies, residual_sample
from .theorem import certificate_to_tiling, decide_two_brick, find_split, one_brick_tileable

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

ENV_NODE_BUDGET = "BRICKBOX_NODE_BUDGET"


def _node_budget(args: argparse.Namespace) -> int:
    if getattr(args, "node_budget", None) is not None:
        return args.node_budget
    env = os.environ.get(ENV_NODE_BUDGET)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"{ENV_NODE_BUDGET} must be an integer: {env!r}") from exc
    return DEFAULT_NODE_BUDGET


def _grid_cap(args: argparse.Namespace) -> int:
    cap = getattr(args, "grid_cap", None)
    return cap if cap is not None else DEFAULT_GRID_CAP


def _load_instance(args: argparse.Namespace) -> tuple[BoxSpec, list[Brick]]:
    if args.input:
        obj = json.loads(Path(args.input).read_text())
        if not isinstance(obj, dict) or "box" not in obj or "bricks" not in obj:
            raise ValueError("instance file needs 'box' and 'bricks'")
        return ser.box_from_obj(obj["box"]), [ser.brick_from_obj(b) for b in obj["bricks"]]
    if not args.box or not args.brick:
        raise ValueError("provide --box and --brick, or --input FILE")
    box = BoxSpec(ser.parse_dims(args.box))
    bricks = [Brick(ser.parse_dims(text)) for text in args.brick]
    return box, bricks


def _load_tiling(args: argparse.Namespace) -> Tiling:
    if not args.input:
        raise ValueError("this command needs --input TILING_JSON")
    return ser.tiling_from_obj(json.loads(Path(args.input).read_text()))


def _emit(args: argparse.Namespace, payload) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _require_two(bricks: list[Brick]) -> tuple[Brick, Brick]:
    if len(bricks) != 2:
        raise ValueError("this command needs exactly two --brick arguments")
    return bricks[0], bricks[1]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_decide(args: argparse.Namespace) -> int:
    box, bricks = _load_instance(args)
    a, b = _require_two(bricks)
    outcome = decide_two_brick(box, a, b)
    _emit(args, ser.decision_to_obj(outcome))
    return EXIT_OK if outcome.tileable else EXIT_NEGATIVE


def _cmd_split(args: argparse.Namespace) -> int:
    box, bricks = _load_instance(args)
    a, b = _require_two(bricks)
    cert = find_split(box, a, b)
    _emit(args, ser.certificate_to_obj(cert) if cert else None)
    return EXIT_OK if cert else EXIT_NEGATIVE


def _single_brick_tiling(box: BoxSpec, brick: Brick) -> Tiling:
    from itertools import product

    counts = [int(L / c) for L, c in zip(box.dims, brick.dims)]
    placements = tuple(
        Placement(0, tuple(k * c for k, c in zip(combo, brick.dims)))
        for combo in product(*(range(n) for n in counts))
    )
    return Tiling(bricks=(brick,), placements=placements, box=box)


def _cmd_tile(args: argparse.Namespace) -> int:
    box, bricks = _load_instance(args)
    use_oracle = args.oracle or len(bricks) >= 3
    if args.emit_matrix:
        grid = build_grid(box, bricks, cap=_grid_cap(args))
        Path(args.emit_matrix).write_text(cover_matrix_text(build_cover_problem(grid)))
    if use_oracle:
        outcome = exact_cover_tileable(
            box, bricks, grid_cap=_grid_cap(args), node_budget=_node_budget(args)
        )
        if outcome.status == TIMEOUT:
            _emit(args, {"status": "timeout", "nodes": outcome.nodes})
            return EXIT_BUDGET
        if outcome.status != SAT:
            _emit(args, {"status": "unsat"})
            return EXIT_NEGATIVE
        _emit(args, ser.tiling_to_obj(outcome.tiling))
        return EXIT_OK
    if len(bricks) == 1:
        if not one_brick_tileable(box, bricks[0]):
            _emit(args, {"status": "unsat"})
            return EXIT_NEGATIVE
        _emit(args, ser.tiling_to_obj(_single_brick_tiling(box, bricks[0])))
        return EXIT_OK
    a, b = bricks
    outcome = decide_two_brick(box, a, b)
    if not outcome.tileable:
        _emit(args, {"status": "unsat", "decision": ser.decision_to_obj(outcome)})
        return EXIT_NEGATIVE
    tiling = certificate_to_tiling(outcome.certificate, box, a, b)
    _emit(args, ser.tiling_to_obj(tiling))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    tiling = _load_tiling(args)
    outcome = verify_tiling_geometric(tiling)
    _emit(args, ser.verify_outcome_to_obj(outcome))
    return EXIT_OK if outcome.ok else EXIT_NEGATIVE


def _cmd_spectral(args: argparse.Namespace) -> int:
    tiling = _load_tiling(args)
    points = random_frequencies(tiling.box.dim, args.samples, args.seed, args.bound)
    report = residual_sample(tiling, points, seed=args.seed)
    _emit(args, ser.spectral_report_to_obj(report))
    if args.tolerance is not None and report.max_abs_residual > args.tolerance:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_counterexample(args: argparse.Namespace) -> int:
    inst = make_instance(args.R)
    tiling = pinwheel_tiling(inst)
    report = verify_no_proper_split(inst, node_budget=_node_budget(args))
    outdir = Path(args.output_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "instance.json").write_text(
        json.dumps(ser.instance_to_obj(inst), indent=2) + "\n"
    )
    (outdir / "tiling.json").write_text(
        json.dumps(ser.tiling_to_obj(tiling), indent=2) + "\n"
    )
    (outdir / "tiling.svg").write_text(tiling_to_svg(tiling))
    (outdir / "nosplit.json").write_text(
        json.dumps(ser.nosplit_report_to_obj(report), indent=2) + "\n"
    )
    _print_nosplit_summary(inst, report)
    return EXIT_OK


def _print_nosplit_summary(inst, report) -> None:
    print(f"three-brick family R={inst.R}: box {inst.R + 1}x{inst.R + 1}")
    print(f"cases decided: {len(report.entries)} (axis x cut x ordered subset pair)")
    print(f"{'axis':>4} {'cut':>5} {'both-SAT':>9} {'left-SAT':>9} {'right-SAT':>10}")
    seen: dict[tuple[int, object], list[int]] = {}
    for e in report.entries:
        key = (e.axis, e.alpha)
        row = seen.setdefault(key, [0, 0, 0])
        row[0] += e.both_sat
        row[1] += e.left_sat
        row[2] += e.right_sat
    for (axis, alpha), (both, left, right) in seen.items():
        print(f"{axis + 1:>4} {str(alpha):>5} {both:>9} {left:>9} {right:>10}")
    if report.no_split:
        print("verdict: no hyperplane cut admits proper-subset tilings on both sides")
    else:
        e = report.split_found
        print(f"verdict: split found at axis {e.axis + 1}, cut {e.alpha}")
    print(f"note: {report.cut_justification}")


def _cmd_render(args: argparse.Namespace) -> int:
    tiling = _load_tiling(args)
    svg = tiling_to_svg(tiling, scale=args.scale)
    if args.output:
        Path(args.output).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_instance_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--box", help="box extents, comma-separated rationals (e.g. 1,1 or 3/2,2)")
    p.add_argument(
        "--brick",
        action="append",
        default=[],
        help="brick extents, comma-separated rationals; repeat once per type",
    )
    p.add_argument("--input", help="instance JSON file with 'box' and 'bricks'")


def _add_budget_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--grid-cap", type=int, help=f"max grid cells (default {DEFAULT_GRID_CAP})")
    p.add_argument(
        "--node-budget",
        type=int,
        help=f"max search nodes (default {DEFAULT_NODE_BUDGET}; env {ENV_NODE_BUDGET})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brickbox",
        description="Decide, construct, and verify tilings of rational boxes by translated bricks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide two-brick tileability, with evidence")
    _add_instance_options(p)
    p.add_argument("--output", help="write the JSON result here instead of stdout")
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("split", help="print a split certificate, or null")
    _add_instance_options(p)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("tile", help="construct an explicit tiling")
    _add_instance_options(p)
    _add_budget_options(p)
    p.add_argument("--oracle", action="store_true", help="force the exact-cover search")
    p.add_argument("--emit-matrix", help="also write the sparse cover matrix to this path")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_tile)

    p = sub.add_parser("verify", help="geometric verification of a tiling file")
    p.add_argument("--input", required=True, help="tiling JSON file")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("spectral", help="sampled frequency-identity residuals of a tiling file")
    p.add_argument("--input", required=True, help="tiling JSON file")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=float, default=10.0, help="sample from [-bound, bound]^d")
    p.add_argument("--tolerance", type=float, help="exit 1 when the max residual exceeds this")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_spectral)

    p = sub.add_parser("counterexample", help="emit and check a three-brick no-split instance")
    p.add_argument("--R", type=int, required=True, help="family parameter, an integer >= 4")
    p.add_argument("--output-dir", default=".", help="directory for the emitted files")
    _add_budget_options(p)
    p.set_defaults(func=_cmd_counterexample)

    p = sub.add_parser("render", help="render a 2-d tiling file as SVG")
    p.add_argument("--input", required=True, help="tiling JSON file")
    p.add_argument("--output", help="SVG path (stdout when omitted)")
    p.add_argument("--scale", type=int, default=100, help="SVG units per length unit")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GridTooLarge, BudgetExhausted) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
