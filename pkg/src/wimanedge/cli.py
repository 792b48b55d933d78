"""Command-line entry point: ``wimanedge verify | plot | list-suites``."""

from __future__ import annotations

import argparse
import sys

from .exactfield import get_field
from .report import PreconditionError
from .suites import SUITE_NAMES, SUITES, exit_status, run_suites

EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wimanedge", description="Exact verification suites for an A5-invariant pencil of sextics.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", nargs="+", default=["all"], metavar="NAME",
                   help="suites to run (default: all); see list-suites")
    v.add_argument("--field", default=None, help="override the working number field, e.g. Q(zeta15)")
    v.add_argument("--report", choices=("text", "jsonl"), default="text")
    v.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    pl = sub.add_parser("plot", help="draw the real picture of a pencil member as SVG")
    pl.add_argument("--lambda", dest="lam", required=True, help="rational")
    pl.add_argument("--mu", required=True, help="rational, k*sqrt5 or k*sqrtm3")
    pl.add_argument("--window", default="-3,3,-3,3", help="xmin,xmax,ymin,ymax in the chart z = 1")
    pl.add_argument("--grid", type=int, default=300)
    pl.add_argument("--out", required=True)

    sub.add_parser("list-suites", help="list the available suites")
    return p


def _verify(args, parser) -> int:
    names = SUITE_NAMES if "all" in args.suite else args.suite
    unknown = [n for n in names if n not in SUITE_NAMES]
    if unknown:
        parser.error(f"unknown suite(s): {', '.join(unknown)}; known: {', '.join(SUITE_NAMES)}")
    field = None
    if args.field:
        try:
            field = get_field(args.field)
        except KeyError as exc:
            parser.error(str(exc.args[0]))
    try:
        entries = run_suites(names, field, args.seed)
    except PreconditionError as exc:
        print(f"wimanedge: precondition error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for e in entries:
        print(e.jsonl() if args.report == "jsonl" else e.text())
    return exit_status(entries)


def _plot(args, parser) -> int:
    from .plot import PlotSpec, parse_value, parse_window, render
    try:
        spec = PlotSpec(parse_value(args.lam), parse_value(args.mu), parse_window(args.window), args.grid, args.out)
    except ValueError as exc:
        parser.error(str(exc))
    res = render(spec)
    counts = ", ".join(f"{k}: {n}" for k, n in res.segments.items())
    print(f"wrote {res.path} ({counts} segments)")
    return 0


def _list() -> int:
    for s in SUITES:
        print(f"{s.name:<11} {len(s.checks):>2} checks  {s.anchor}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _verify(args, parser)
    if args.command == "plot":
        return _plot(args, parser)
    return _list()


if __name__ == "__main__":
    sys.exit(main())
