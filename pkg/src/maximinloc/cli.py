"""Command-line interface: generate instances, solve them with any method,
reproduce the benchmark tables, and plot instances to SVG.

Exit codes: 0 success, 2 usage error, 3 input/parse error, 4 unsupported
method/region combination.
"""

from __future__ import annotations

import argparse
import os
import sys

from .geom import Point
from .instances import (InstanceFormatError, generate_points, make_instance,
                        read_points, write_points)
from .mesh import convex_hull, delaunay
from .report import CSV_COLUMNS, RunReport, build_report
from .solvers import (SolverConfig, apollonius_global, btst,
                      multistart_heuristic)
from .svgplot import render_instance_svg

METHODS = ("btst1", "btst2", "apollonius", "heuristic")
EXACT_METHODS = ("btst1", "btst2", "apollonius")
BENCH_COLUMNS = CSV_COLUMNS + ("hull_sides", "delaunay_triangles")


class UsageError(Exception):
    pass


class UnsupportedCombinationError(Exception):
    pass


def _instance_size(value: str) -> int:
    n = int(value)
    if n < 3:
        raise argparse.ArgumentTypeError("n must be >= 3")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maximinloc",
        description="Weighted obnoxious facility location: place one point "
                    "in a convex region maximizing the minimum weighted "
                    "distance to the demand points.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a reproducible instance file")
    g.add_argument("--n", type=_instance_size, required=True,
                   help="number of demand points (>= 3)")
    g.add_argument("--out", required=True, help="output CSV path")
    g.set_defaults(func=_cmd_generate)

    s = sub.add_parser("solve", help="solve an instance file")
    s.add_argument("instance", help="instance CSV path")
    s.add_argument("--method", required=True, choices=METHODS)
    s.add_argument("--region", choices=("hull", "square"), default="hull")
    s.add_argument("--epsilon", type=float, default=1e-10,
                   help="relative accuracy for the BTST variants")
    s.add_argument("--starts", type=int, default=100,
                   help="heuristic multi-start count")
    s.add_argument("--seed", type=int, default=1, help="heuristic RNG seed")
    s.add_argument("--reference", type=float, default=None,
                   help="known optimum for heuristic hit counting")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out", default=None, help="report path (default stdout)")
    s.set_defaults(func=_cmd_solve)

    b = sub.add_parser("bench", help="benchmark table over generated instances")
    b.add_argument("--n", required=True,
                   help="sizes: '100..1000' (with --step), '100,200' or '250'")
    b.add_argument("--step", type=int, default=100)
    b.add_argument("--method", required=True,
                   help="comma-separated list from: " + ", ".join(METHODS))
    b.add_argument("--region", choices=("hull", "square"), default="hull")
    b.add_argument("--epsilon", type=float, default=1e-10)
    b.add_argument("--starts", type=int, default=100)
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--out", default=None, help="CSV path (default stdout)")
    b.add_argument("--figures", default=None,
                   help="directory for per-run matplotlib figures")
    b.set_defaults(func=_cmd_bench)

    p = sub.add_parser("plot", help="render an instance (and solution) to SVG")
    p.add_argument("instance", help="instance CSV path")
    p.add_argument("--solution", default=None,
                   help="JSON run report whose optimum to mark")
    p.add_argument("--delaunay", action="store_true",
                   help="draw the Delaunay edges")
    p.add_argument("--region", choices=("hull", "square"), default="hull")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=_cmd_plot)
    return parser


def _solve_one(points, method: str, region: str, cfg: SolverConfig,
               reference: float | None):
    inst = make_instance(points, region=region)
    if method == "btst1" or method == "btst2":
        return inst, btst(inst, variant=method, cfg=cfg)
    if method == "apollonius":
        return inst, apollonius_global(inst)
    if method == "heuristic":
        return inst, multistart_heuristic(inst, cfg, reference=reference)
    raise UsageError(f"unknown method {method!r}")


def _cmd_generate(args) -> int:
    write_points(generate_points(args.n), args.out)
    return 0


def _cmd_solve(args) -> int:
    if args.method in ("btst1", "btst2") and args.region == "square":
        raise UnsupportedCombinationError(
            "the BTST variants are restricted to the convex-hull region")
    points = read_points(args.instance)
    cfg = SolverConfig(epsilon=args.epsilon, starts=args.starts,
                       seed=args.seed)
    inst, solution = _solve_one(points, args.method, args.region, cfg,
                                args.reference)
    report = build_report(args.instance, inst, args.region, args.method,
                          solution, epsilon=args.epsilon, starts=args.starts,
                          seed=args.seed)
    text = report.to_json() + "\n" if args.format == "json" else report.to_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_sizes(spec: str, step: int) -> list[int]:
    spec = spec.strip()
    try:
        if ".." in spec:
            lo_s, hi_s = spec.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if step < 1 or hi < lo:
                raise UsageError(f"bad size range {spec!r} with step {step}")
            return list(range(lo, hi + 1, step))
        return [int(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"bad size list {spec!r}") from exc


def _cmd_bench(args) -> int:
    sizes = _parse_sizes(args.n, args.step)
    if not sizes:
        raise UsageError("no instance sizes given")
    if any(n < 3 for n in sizes):
        raise UsageError("all sizes must be >= 3")
    methods = [m.strip() for m in args.method.split(",") if m.strip()]
    if not methods:
        raise UsageError("no methods given")
    for m in methods:
        if m not in METHODS:
            raise UsageError(f"unknown method {m!r}")
    if args.region == "square" and any(m.startswith("btst") for m in methods):
        raise UnsupportedCombinationError(
            "the BTST variants are restricted to the convex-hull region")
    if args.figures:
        os.makedirs(args.figures, exist_ok=True)

    cfg = SolverConfig(epsilon=args.epsilon, starts=args.starts,
                       seed=args.seed)
    lines = [",".join(BENCH_COLUMNS)]
    for n in sizes:
        points = generate_points(n)
        hull_sides = len(convex_hull([p.location for p in points]).vertices)
        triangles = delaunay(points).count
        exact_objective: float | None = None
        for method in methods:
            reference = exact_objective if method == "heuristic" else None
            inst, solution = _solve_one(points, method, args.region, cfg,
                                        reference)
            if method in EXACT_METHODS and exact_objective is None:
                exact_objective = solution.objective
            report = build_report(f"generated:{n}", inst, args.region, method,
                                  solution, epsilon=args.epsilon,
                                  starts=args.starts, seed=args.seed)
            row = report.to_csv().splitlines()[1]
            lines.append(f"{row},{hull_sides},{triangles}")
            if args.figures:
                from .figures import render_instance_figure

                fig_path = os.path.join(
                    args.figures, f"bench_{args.region}_n{n}_{method}.png")
                render_instance_figure(
                    inst, fig_path, solution=solution.location,
                    title=f"n={n} {method} ({args.region}): "
                          f"L={solution.objective:.5f}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_plot(args) -> int:
    points = read_points(args.instance)
    inst = make_instance(points, region=args.region)
    solution = None
    if args.solution:
        with open(args.solution, "r", encoding="utf-8") as fh:
            report = RunReport.from_json(fh.read())
        solution = Point(report.x, report.y)
    tri = delaunay(inst.points) if args.delaunay else None
    render_instance_svg(inst, args.out, solution=solution, triangulation=tri)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedCombinationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InstanceFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
