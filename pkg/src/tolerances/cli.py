"""Command-line front end: ``analyze``, ``verify`` and ``export-dot``."""

from __future__ import annotations

import argparse
import json
import sys

from .blocks import DEFAULT_BLOCK_CAP
from .dot import lattice_hasse, quasiorder_hasse, tolerance_graph
from .errors import ParseError, ResourceLimitError, ValidationError
from .fileformat import RelationFile, load
from .lattice import upper_definable
from .relation import quasiorder_of
from .report import analyze, render_table
from .verify import SUITES, block_oracle_suite, definable_oracle_suite, run_suite

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_RESOURCE = 4

RANDOM_SUITES = {"blocks": block_oracle_suite, "definable": definable_oracle_suite}


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tolerances", description="Analyse finite tolerance relations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full structural report for a tolerance or covering file")
    p.add_argument("file")
    p.add_argument("--report", choices=("json", "table"), default="json")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute-force oracles")
    p.add_argument("--block-cap", type=_positive, default=DEFAULT_BLOCK_CAP)
    p.add_argument("--dedup", action="store_true", help="drop repeated sets in covering files")

    p = sub.add_parser("verify", help="run an exhaustive or randomized theorem suite")
    p.add_argument("suite", help=f"one of {', '.join([*SUITES, *RANDOM_SUITES])}")
    p.add_argument("--n", type=int, required=True, help="size bound (sample count for random suites)")
    p.add_argument("--seed", type=int, default=None, help="RNG seed for random suites")

    p = sub.add_parser("export-dot", help="emit Graphviz DOT")
    p.add_argument("file")
    p.add_argument("--what", choices=("graph", "hasse", "lattice"), default="graph")
    p.add_argument("--dedup", action="store_true")
    return parser


def _analyze(args) -> tuple[int, str]:
    rf = load(args.file)
    if rf.kind not in ("tolerance", "covering"):
        raise ValidationError(f"analyze expects a tolerance or covering file, got {rf.kind}")
    covering = rf.covering(args.dedup) if rf.kind == "covering" else None
    R = rf.tolerance(args.dedup)
    report = analyze(R, covering, oracle=args.oracle, block_cap=args.block_cap)
    if args.report == "table":
        return EXIT_OK, render_table(report)
    return EXIT_OK, json.dumps(report, indent=2) + "\n"


def _verify(args) -> tuple[int, str]:
    if args.suite in RANDOM_SUITES:
        if args.n < 1:
            raise ValidationError("sample count must be positive")
        kwargs = {"samples": args.n}
        if args.seed is not None:
            kwargs["seed"] = args.seed
        res = RANDOM_SUITES[args.suite](**kwargs)
    else:
        res = run_suite(args.suite, args.n)
    lines = [res.summary()]
    lines += [f"  {f}" for f in res.failures[:20]]
    return (EXIT_OK if res.passed else EXIT_INCONSISTENT), "\n".join(lines) + "\n"


def _export(args) -> tuple[int, str]:
    rf: RelationFile = load(args.file)
    if args.what == "lattice":
        if rf.kind == "lattice":
            return EXIT_OK, lattice_hasse(rf.lattice())
        return EXIT_OK, lattice_hasse(upper_definable(rf.tolerance(args.dedup)).lattice())
    if args.what == "hasse":
        Q = rf.quasiorder() if rf.kind == "quasiorder" else quasiorder_of(rf.tolerance(args.dedup))
        return EXIT_OK, quasiorder_hasse(Q)
    if rf.kind == "lattice":
        raise ValidationError("graph export needs a tolerance or covering file")
    if rf.kind == "quasiorder":
        raise ValidationError("graph export needs a tolerance or covering file; use --what hasse")
    return EXIT_OK, tolerance_graph(rf.tolerance(args.dedup))


COMMANDS = {"analyze": _analyze, "verify": _verify, "export-dot": _export}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, out = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    # output is buffered and written once
    sys.stdout.write(out)
    return code
