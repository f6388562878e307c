"""Command-line front end.

Subcommands wrap the library operations one-to-one and emit deterministic
JSON or CSV on stdout; diagnostics go to stderr.  Exit codes: 0 success,
1 failed assertion-style check, 2 validation error.
"""

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .bodies import Ball, minkowski, sample_support
from .chebyshev import chebyshev
from .constructions import (
    Interval1D,
    PairParams1D,
    interval_pair_to_params,
    interval_to_width_mid,
    params_to_interval_pair,
    reuleaux_polygon,
    reuleaux_triangle,
    tetra_ball_body,
    width_mid_to_interval,
)
from .errors import CheckFailedError, WidthLabError
from .experiments import gram_rank, ball_intersection_width_sweep, width_sweep_csv
from .grids import direction_grid
from .pairs import certify_pair, pair_sum_width_check, width_and_center
from .serialization import body_to_json_str, load_body
from .transforms import rotation_2d
from .widths import hausdorff_distance, width_profile_csv, width_report


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    grid_n: int
    tol_abs: float
    tol_rel: float
    seed: int
    output_format: str
    iteration_budget: int

    def __post_init__(self):
        if self.grid_n < 8 or self.grid_n % 2 != 0:
            raise WidthLabError("grid size must be even and >= 8")
        if not (self.tol_abs > 0 and self.tol_rel > 0):
            raise WidthLabError("tolerances must be positive")
        if self.output_format not in ("json", "csv"):
            raise WidthLabError("format must be json or csv")


def _emit_json(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _config(args, default_grid):
    return RunConfig(
        grid_n=args.grid if args.grid is not None else default_grid,
        tol_abs=args.tol,
        tol_rel=args.tol_rel,
        seed=args.seed,
        output_format=args.format,
        iteration_budget=args.budget,
    )


def _grid_for(body_dim, cfg):
    return direction_grid(body_dim, cfg.grid_n)


def _cmd_width_check(args):
    body = load_body(args.body)
    cfg = _config(args, 20000 if body.dim == 3 else 4096)
    grid = _grid_for(body.dim, cfg)
    sample = sample_support(body, grid)
    report = width_report(body, grid, sample=sample)
    if cfg.output_format == "csv":
        sys.stdout.write(width_profile_csv(body, grid, sample=sample))
    else:
        _emit_json(report.to_json())
    if args.expect_constant or args.expect_width is not None:
        threshold = args.tol * max(1.0, abs(report.mean_width))
        if report.spread > threshold:
            raise CheckFailedError(f"width is not constant (spread {report.spread!r})")
        if args.expect_width is not None:
            target = args.expect_width
            if abs(report.mean_width - target) > args.tol * max(1.0, abs(target)):
                raise CheckFailedError(
                    f"mean width {report.mean_width!r} differs from expected {target!r}"
                )
    return 0


def _cmd_hausdorff(args):
    left = load_body(args.body)
    right = load_body(args.other)
    cfg = _config(args, 20000 if left.dim == 3 else 4096)
    grid = _grid_for(left.dim, cfg)
    _emit_json({"hausdorff": hausdorff_distance(left, right, grid)})
    return 0


def _cmd_chebyshev(args):
    body = load_body(args.body)
    cfg = _config(args, 20000 if body.dim == 3 else 4096)
    grid = _grid_for(body.dim, cfg)
    data = chebyshev(body, grid, tol=cfg.tol_rel, budget=cfg.iteration_budget)
    _emit_json(data.to_json())
    return 0


def _cmd_reuleaux(args):
    pose = rotation_2d(args.angle) if args.angle else None
    if args.polygon:
        body = reuleaux_polygon(args.d, args.polygon, pose=pose)
    else:
        body = reuleaux_triangle(args.d, pose=pose)
    text = body_to_json_str(body)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_gram_rank(args):
    cfg = _config(args, 4096)
    grid = direction_grid(2, cfg.grid_n)
    report = gram_rank(args.l, args.d, grid, threshold=args.threshold)
    if cfg.output_format == "csv":
        sys.stdout.write(report.singular_values_csv())
    else:
        _emit_json(report.to_json())
    return 0


def _cmd_tetra_sweep(args):
    cfg = _config(args, 20000)
    body = tetra_ball_body(args.r)
    grid = direction_grid(3, cfg.grid_n)
    report = ball_intersection_width_sweep(body, grid)
    if cfg.output_format == "csv":
        sys.stdout.write(width_sweep_csv(body, grid))
    else:
        payload = report.to_json()
        payload["ratio"] = float(report.max_width / report.min_width)
        _emit_json(payload)
    return 0


def _cmd_homotopy_trace(args):
    body = load_body(args.body)
    cfg = _config(args, 20000 if body.dim == 3 else 4096)
    grid = _grid_for(body.dim, cfg)
    fiber = width_and_center(body, grid, tol=cfg.tol_rel)
    ball = Ball(fiber.center, fiber.width / 2.0)
    header = ["t", "width_mean", "width_spread"]
    header += [f"center_{i}" for i in range(body.dim)]
    header.append("hausdorff_to_ball")
    sys.stdout.write(",".join(header) + "\n")
    for t in np.linspace(0.0, 1.0, args.steps):
        stage = minkowski([(float(t), body), (float(1.0 - t), ball)])
        report = width_report(stage, grid)
        coords = width_and_center(stage, grid, tol=cfg.tol_rel)
        row = [repr(float(t)), repr(report.mean_width), repr(report.spread)]
        row += [repr(float(x)) for x in coords.center]
        row.append(repr(hausdorff_distance(stage, ball, grid)))
        sys.stdout.write(",".join(row) + "\n")
    return 0


def _cmd_pair_sum(args):
    left = load_body(args.left)
    right = load_body(args.right)
    cfg = _config(args, 20000 if left.dim == 3 else 4096)
    grid = _grid_for(left.dim, cfg)
    try:
        pair = certify_pair(left, right, grid, tol=cfg.tol_rel)
    except WidthLabError as exc:
        raise CheckFailedError(str(exc)) from exc
    result = pair_sum_width_check(pair, grid)
    _emit_json(result.to_json())
    if not result.passed:
        raise CheckFailedError(
            f"pair sum width check failed (mean error {result.mean_error!r})"
        )
    return 0


def _cmd_dim1(args):
    if args.forward == args.inverse:
        raise WidthLabError("choose exactly one of --forward / --inverse")
    if args.forward:
        if args.pair is not None:
            x, y, v, z = args.pair
            params = interval_pair_to_params(Interval1D(x, y), Interval1D(v, z))
            _emit_json({"d": params.d, "a": params.a, "p": params.p})
        elif args.interval is not None:
            lo, hi = args.interval
            d, mid = interval_to_width_mid(Interval1D(lo, hi))
            _emit_json({"d": d, "mid": mid})
        else:
            raise WidthLabError("--forward needs --interval or --pair")
    else:
        if args.a is not None or args.p is not None:
            if args.d is None or args.a is None or args.p is None:
                raise WidthLabError("pair inverse needs --d, --a and --p")
            left, right = params_to_interval_pair(PairParams1D(args.d, args.a, args.p))
            _emit_json({"left": [left.lo, left.hi], "right": [right.lo, right.hi]})
        else:
            if args.d is None or args.mid is None:
                raise WidthLabError("interval inverse needs --d and --mid")
            interval = width_mid_to_interval(args.d, args.mid)
            _emit_json({"lo": interval.lo, "hi": interval.hi})
    return 0


def _add_common(parser, with_grid=True):
    parser.add_argument("--tol", type=float, default=1e-7,
                        help="absolute tolerance for checks (default 1e-7)")
    parser.add_argument("--tol-rel", type=float, default=1e-7, dest="tol_rel",
                        help="relative tolerance (default 1e-7)")
    parser.add_argument("--seed", type=int, default=0, help="seed for random generators")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--budget", type=int, default=5000,
                        help="iteration budget for the minimax solver")
    if with_grid:
        parser.add_argument("--grid", type=int, default=None,
                            help="direction count (default 4096 planar, 20000 spatial)")


def build_parser():
    parser = _Parser(prog="widthlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("width-check", help="width report of a body")
    p.add_argument("--body", required=True)
    p.add_argument("--expect-constant", action="store_true")
    p.add_argument("--expect-width", type=float, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_width_check)

    p = sub.add_parser("hausdorff", help="sampled Hausdorff distance of two bodies")
    p.add_argument("--body", required=True)
    p.add_argument("--other", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_hausdorff)

    p = sub.add_parser("chebyshev", help="smallest enclosing ball of a body")
    p.add_argument("--body", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_chebyshev)

    p = sub.add_parser("reuleaux", help="emit a constant-width disc intersection as JSON")
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--polygon", type=int, default=None, help="odd side count (default triangle)")
    p.add_argument("--angle", type=float, default=0.0, help="rotation about the origin")
    p.add_argument("--out", default=None)
    _add_common(p, with_grid=False)
    p.set_defaults(func=_cmd_reuleaux)

    p = sub.add_parser("gram-rank", help="numerical rank of the rotated family")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--d", type=float, default=1.0)
    p.add_argument("--threshold", type=float, default=1e-8)
    _add_common(p)
    p.set_defaults(func=_cmd_gram_rank)

    p = sub.add_parser("tetra-sweep", help="width sweep of the four-ball body")
    p.add_argument("--r", type=float, default=1.0)
    _add_common(p)
    p.set_defaults(func=_cmd_tetra_sweep)

    p = sub.add_parser("homotopy-trace", help="contraction trace of a constant-width body")
    p.add_argument("--body", required=True)
    p.add_argument("--steps", type=int, default=11)
    _add_common(p)
    p.set_defaults(func=_cmd_homotopy_trace)

    p = sub.add_parser("pair-sum", help="width of Y+Z for a constant-relative-width pair")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_pair_sum)

    p = sub.add_parser("dim1", help="1-D interval parameter maps")
    p.add_argument("--forward", action="store_true")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--interval", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--pair", type=float, nargs=4, metavar=("X", "Y", "V", "Z"))
    p.add_argument("--d", type=float, default=None)
    p.add_argument("--mid", type=float, default=None)
    p.add_argument("--a", type=float, default=None)
    p.add_argument("--p", type=float, default=None)
    _add_common(p, with_grid=False)
    p.set_defaults(func=_cmd_dim1)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CheckFailedError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except WidthLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
