"""Command-line entry point: ``hsskernel {catalog,expand,verify,topology}``.

Exit status is 0 when every check passes, 1 when any check fails and 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import shlex
import sys

from . import __version__
from . import suites
from .catalog import LabelError, SpaceLabel
from .kernels import Kind, KernelSpec
from .report import Report


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=None, help="override every numeric tolerance")
    p.add_argument("--max-l", type=int, default=8, dest="max_l")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--timings", action="store_true", help="record wall time per check (reports stop being byte-stable)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="hsskernel", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hsskernel {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", parents=[common], help="list spaces and their invariants")
    c.add_argument("--family", default=None)

    e = sub.add_parser("expand", parents=[common], help="exact Laurent profile of a kernel")
    e.add_argument("space", help='label such as "I(2,2)", "IV(5)", "EVII"')
    e.add_argument("kind", help="szego or bergman")
    e.add_argument("mu", type=int, nargs="?", default=1)

    v = sub.add_parser("verify", parents=[common], help="numeric cross-checks on type I spaces")
    v.add_argument("suite", choices=suites.SUITES + ("all",))

    t = sub.add_parser("topology", parents=[common], help="Betti obstruction sweep and lens cohomology")
    t.add_argument("--mu", type=int, default=2)
    t.add_argument("--lens", type=int, nargs=2, metavar=("N", "M"), default=None)
    return parser


def run(args: argparse.Namespace, argv: list[str]) -> Report:
    seed = args.seed if args.command == "verify" else None
    report = Report(__version__, "hsskernel " + shlex.join(argv), seed)
    if args.command == "catalog":
        report.extend(suites.catalog_checks(args.family, args.max_l))
    elif args.command == "expand":
        label = SpaceLabel.parse(args.space)
        spec = KernelSpec(Kind.parse(args.kind), args.mu)
        report.extend(suites.expand_checks(label, spec))
    elif args.command == "verify":
        report.extend(suites.run_suite(args.suite, args.seed, args.tol))
    elif args.command == "topology":
        lens = tuple(args.lens) if args.lens else None
        report.extend(suites.topology_checks(args.max_l, args.mu, lens))
    return report


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args, argv)
    except (LabelError, ValueError) as exc:
        parser.error(str(exc))
    text = report.render(args.format, timings=args.timings)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
