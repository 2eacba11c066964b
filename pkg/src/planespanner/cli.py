"""Command-line entry point.

Subcommands read JSON from ``-i`` (default stdin) and write to ``-o``
(default stdout), so they compose with pipes::

    planespanner gen --kind regular-ngon --n 23 | planespanner build convex \\
        | planespanner verify --expect-degree 3 --expect-stretch 5.1888

Exit status: 0 on success, 1 on bad input, 2 when a verification
expectation fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import io
from .bounds import default_domain, scan_max
from .convex import build_convex_spanner
from .errors import SpannerError
from .generators import KINDS, InstanceSpec, generate
from .graph import GeometricGraph
from .grid import Grid, build_grid_spanner
from .render import render_svg
from .steiner import augment_to_degree3
from .verify import verify

log = logging.getLogger("planespanner")

EXIT_OK, EXIT_INPUT, EXIT_EXPECT = 0, 1, 2


def _read(args):
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        text = Path(args.input).read_text()
    return io.loads(text)


def _write(args, text: str) -> None:
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)


_DOC_NAMES = {tuple: "points", Grid: "grid", GeometricGraph: "graph"}


def _need(obj, kind, command):
    if not isinstance(obj, kind):
        raise SpannerError(f"{command} expects a {_DOC_NAMES[kind]} document")
    return obj


def cmd_gen(args) -> int:
    seed = int(os.environ.get("SPANNER_SEED", args.seed))
    spec = InstanceSpec(args.kind, n=args.n, rows=args.rows, cols=args.cols, seed=seed, scale=args.scale)
    _write(args, io.dumps(generate(spec)))
    return EXIT_OK


def cmd_build_convex(args) -> int:
    obj = _read(args)
    points = obj.points if isinstance(obj, GeometricGraph) else _need(obj, tuple, "build convex")
    G, pair = build_convex_spanner(points)
    log.info("diametral pair %s", pair)
    _write(args, io.dumps(G))
    return EXIT_OK


def cmd_build_grid(args) -> int:
    grid = _need(_read(args), Grid, "build grid")
    _write(args, io.dumps(build_grid_spanner(grid)))
    return EXIT_OK


def cmd_augment(args) -> int:
    G = _need(_read(args), GeometricGraph, "augment steiner")
    _write(args, io.dumps(augment_to_degree3(G, args.epsilon)))
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _need(_read(args), GeometricGraph, "verify")
    report = verify(G, restrict_original=args.restrict_original)
    _write(args, json.dumps(report.to_dict()) + "\n")
    if args.figure:
        from .plotting import plot_report

        plot_report(G, report, args.figure)
    ok = report.is_plane
    if args.expect_degree is not None and report.max_degree > args.expect_degree:
        log.error("max degree %d exceeds %d", report.max_degree, args.expect_degree)
        ok = False
    if args.expect_stretch is not None and not (report.connected and report.stretch <= args.expect_stretch):
        log.error("stretch %s exceeds %s", report.stretch, args.expect_stretch)
        ok = False
    if not report.is_plane:
        log.error("edges %s and %s cross", *report.crossing)
    return EXIT_OK if ok else EXIT_EXPECT


def cmd_render(args) -> int:
    if args.output in (None, "-"):
        raise SpannerError("render needs -o PATH for the SVG file")
    obj = _read(args)
    if isinstance(obj, Grid):
        if args.stage == "post":
            render_svg(build_grid_spanner(obj), args.output, grid=obj)
        else:
            render_svg(obj, args.output)
    elif isinstance(obj, GeometricGraph):
        render_svg(obj, args.output)
    else:
        render_svg(GeometricGraph(obj, ()), args.output)
    return EXIT_OK


def cmd_bounds_scan(args) -> int:
    domain = default_domain(args.function, args.steps)
    result = scan_max(domain)
    _write(args, json.dumps({"function": args.function, "steps": args.steps, **result.to_dict()}) + "\n")
    if args.figure:
        from .plotting import plot_bound_scan

        plot_bound_scan(domain, result, args.figure)
    return EXIT_OK if result.satisfied else EXIT_EXPECT


def _io_flags(p):
    p.add_argument("-i", "--input", help="input JSON file (default: stdin)")
    p.add_argument("-o", "--output", help="output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="planespanner", description="Degree-3 plane spanners.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a seeded instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--seed", type=int, default=0, help="overridden by $SPANNER_SEED")
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("build", help="construct a spanner")
    bsub = p.add_subparsers(dest="family", required=True)
    q = bsub.add_parser("convex", help="points in convex position")
    _io_flags(q)
    q.set_defaults(func=cmd_build_convex)
    q = bsub.add_parser("grid", help="non-uniform rectangular grid")
    _io_flags(q)
    q.set_defaults(func=cmd_build_grid)

    p = sub.add_parser("augment", help="transform a plane spanner")
    asub = p.add_subparsers(dest="method", required=True)
    q = asub.add_parser("steiner", help="degree 3 via Steiner points")
    q.add_argument("--epsilon", type=float, required=True)
    _io_flags(q)
    q.set_defaults(func=cmd_augment)

    p = sub.add_parser("verify", help="planarity, degree and stretch report")
    p.add_argument("--expect-stretch", type=float)
    p.add_argument("--expect-degree", type=int)
    p.add_argument("--restrict-original", action="store_true",
                   help="measure stretch over non-Steiner vertices only")
    p.add_argument("--figure", help="also write a matplotlib figure to this path")
    _io_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="write an SVG drawing")
    p.add_argument("--stage", choices=("pre", "post"), default="pre",
                   help="for grid input: colour classes before or after construction")
    _io_flags(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("bounds", help="numerical checks of the chain-ratio bounds")
    bsub = p.add_subparsers(dest="action", required=True)
    q = bsub.add_parser("scan", help="grid scan with local refinement")
    q.add_argument("--function", choices=("f", "g"), required=True)
    q.add_argument("--steps", type=int, default=2000)
    q.add_argument("--figure", help="also write a heat map to this path")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_bounds_scan)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (SpannerError, ValueError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
