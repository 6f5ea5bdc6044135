"""Command-line front end: ``solve``, ``gen`` and ``bench``.

Exit codes: 0 success, 1 input error, 2 solver error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .bench import parse_suite, run_benchmark
from .errors import InvalidPolygon, PiaError
from .grid import GridConfig, solve_grid
from .lp import solve_chebyshev
from .polygen import generate_corpus
from .polyio import FormatError, read_corpus, read_polygon, write_corpus, format_polygon
from .random_search import RandomConfig, solve_random
from .svg import render_svg

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SOLVER = 2


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; argparse would otherwise use exit status 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pia", description="Largest inscribed circle (pole of inaccessibility) of a polygon.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve a single polygon")
    p.add_argument("--input", required=True, help="polygon file: JSON array of [x, y] pairs")
    p.add_argument("--algorithm", choices=("grid", "random", "lp"), default="lp")
    p.add_argument("--n", type=int, default=12, help="grid columns")
    p.add_argument("--m", type=int, default=None, help="grid rows (default: same as --n)")
    p.add_argument("--k", type=int, default=15, help="consecutive misses before shrinking (random)")
    p.add_argument("--accuracy", type=float, default=1e-9, help="stop once the region's short side is this small")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample-cap", type=int, default=10_000, help="max draws per region (random)")
    p.add_argument("--svg", help="write an SVG drawing here")
    p.add_argument("--show-nodes", action="store_true", help="overlay every probed node in the SVG")

    g = sub.add_parser("gen", help="generate a polygon corpus")
    g.add_argument("--shape", choices=("triangle", "convex"), default="triangle")
    g.add_argument("--count", type=int, default=200)
    g.add_argument("--seed", type=int, default=7)
    g.add_argument("--n", type=int, default=12, help="vertices per convex polygon")
    g.add_argument("--out", help="output path (default: standard output)")

    b = sub.add_parser("bench", help="benchmark solvers over a corpus")
    b.add_argument("--corpus", required=True)
    b.add_argument("--suite", default="default", help="'default' or a comma list such as grid12,random50,lp")
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--seed", type=int, default=0, help="base seed for randomized runs")
    b.add_argument("--accuracy", type=float, default=1e-9)
    b.add_argument("--out", help="CSV report path; figures are written next to it")
    b.add_argument("--no-figures", action="store_true", help="skip the PNG figures")
    return parser


def _solve(args) -> int:
    try:
        poly = read_polygon(args.input)
    except (OSError, FormatError) as exc:
        raise _InputError(str(exc)) from exc

    nodes = [] if args.show_nodes else None
    on_node = (lambda p, inside, d: nodes.append((p, inside))) if nodes is not None else None
    try:
        if args.algorithm == "grid":
            cfg = GridConfig(n=args.n, m=args.m or args.n, min_accuracy=args.accuracy)
        elif args.algorithm == "random":
            cfg = RandomConfig(k=args.k, min_accuracy=args.accuracy, sample_cap=args.sample_cap, seed=args.seed)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc

    t0 = time.perf_counter_ns()
    if args.algorithm == "lp":
        result = solve_chebyshev(poly)
    elif args.algorithm == "grid":
        result = solve_grid(poly, cfg, on_node=on_node)
    else:
        result = solve_random(poly, cfg, on_node=on_node)
    elapsed_us = (time.perf_counter_ns() - t0) // 1000

    print(json.dumps({
        "x": result.center.x,
        "y": result.center.y,
        "radius": result.radius,
        "iterations": result.iterations,
        "nodes_evaluated": result.nodes_evaluated,
        "algorithm": args.algorithm,
        "elapsed_us": elapsed_us,
    }))
    if args.svg:
        try:
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(render_svg(poly, result, nodes))
        except OSError as exc:
            raise _InputError(f"cannot write {args.svg}: {exc}") from exc
    return EXIT_OK


def _gen(args) -> int:
    try:
        polys = generate_corpus(args.shape, args.count, args.seed, n=args.n)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    if args.out:
        try:
            write_corpus(args.out, polys)
        except OSError as exc:
            raise _InputError(f"cannot write {args.out}: {exc}") from exc
    else:
        for poly in polys:
            sys.stdout.write(format_polygon(poly) + "\n")
    return EXIT_OK


def _bench(args) -> int:
    try:
        corpus = read_corpus(args.corpus)
        suite = parse_suite(args.suite, args.accuracy)
    except (OSError, FormatError, ValueError) as exc:
        raise _InputError(str(exc)) from exc
    if not corpus:
        raise _InputError(f"{args.corpus}: corpus is empty")
    if args.repeats < 1:
        raise _InputError("--repeats must be >= 1")

    def progress(label):
        print(f"running {label} ...", file=sys.stderr)

    report = run_benchmark(corpus, suite, args.repeats, seed=args.seed, progress=progress)
    print(report.format_table())
    if args.out:
        try:
            report.write_csv(args.out)
            if not args.no_figures:
                from .plotting import figure_paths, plot_precision, plot_runtime

                precision_png, runtime_png = figure_paths(args.out)
                plot_precision(report, precision_png)
                plot_runtime(report, runtime_png)
        except OSError as exc:
            raise _InputError(f"cannot write report: {exc}") from exc
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {"solve": _solve, "gen": _gen, "bench": _bench}[args.command]
    try:
        return handler(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvalidPolygon as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PiaError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
