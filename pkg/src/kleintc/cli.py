"""Command line interface.

    kleintc verify all|main|remark|cocycles|ddzero|identities|periodicity|group
    kleintc eval <cochain> <cell>
    kleintc boundary <cell> [--m M]
    kleintc group mul|inv|conj <element> ...

Exit status: 0 success / all checks pass, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from kleintc.bar import BarCell, boundary
from kleintc.cochains import NAMES, CochainDomainError, evaluate, named
from kleintc.fibrewise import NotInComplexError, boundary_fib
from kleintc.group import conjugate, inverse, product
from kleintc.literals import LiteralError, parse_cell, parse_element
from kleintc.verifier import CHECKS, RESIDUE_K, RESIDUE_L, Config, ConfigError, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return list(range(lo_i, hi_i + 1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kleintc", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run certificate and identity checks")
    v.add_argument("check", choices=("all",) + CHECKS)
    grid = v.add_mutually_exclusive_group()
    grid.add_argument("--residues", action="store_true", help="k in 0..3, l in 0..1 (default)")
    grid.add_argument("--k-range", type=_int_range, metavar="LO..HI",
                      help="k values; write --k-range=-6..6 for negative bounds")
    v.add_argument("--l-range", type=_int_range, metavar="LO..HI")
    v.add_argument("--m", type=int, help="complex for the ddzero check (default: 2, 3 and 5)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--samples", type=int, default=10_000, help="periodicity samples")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--no-wide", action="store_true", help="skip the [-6,6]x[-3,3] sanity grid")
    v.add_argument("--config", metavar="FILE", help="JSON config; flags are ignored when given")
    v.add_argument("--json", action="store_true")

    e = sub.add_parser("eval", help="evaluate a named cochain on a cell")
    e.add_argument("cochain", help=f"one of {', '.join(NAMES)}")
    e.add_argument("cell")

    b = sub.add_parser("boundary", help="print the mod-2 boundary of a cell")
    b.add_argument("cell")
    b.add_argument("--m", type=int, help="ambient complex (default: the cell's fibre length)")

    g = sub.add_parser("group", help="Klein bottle group arithmetic")
    g.add_argument("op", choices=("mul", "inv", "conj"))
    g.add_argument("elements", nargs="+")
    return parser


def _config_from_args(args) -> Config:
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        return Config.from_mapping(data)
    if args.residues and args.l_range:
        raise ConfigError("--residues cannot be combined with --l-range")
    checks = CHECKS if args.check == "all" else (args.check,)
    return Config(
        checks=checks,
        k_values=args.k_range or list(RESIDUE_K),
        l_values=args.l_range or list(RESIDUE_L),
        wide=not args.no_wide,
        m=args.m,
        samples=args.samples,
        seed=args.seed,
        jobs=args.jobs,
    )


def cmd_verify(args) -> int:
    reports, status = run_all(_config_from_args(args))
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.summary())
        print("all checks passed" if status == EXIT_OK else "FAILED")
    return status


def cmd_eval(args) -> int:
    try:
        c = named(args.cochain)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    print(evaluate(c, parse_cell(args.cell)))
    return EXIT_OK


def cmd_boundary(args) -> int:
    cell = parse_cell(args.cell)
    if isinstance(cell, BarCell):
        print(boundary(cell))
    else:
        print(boundary_fib(cell, cell.fibre.dim if args.m is None else args.m))
    return EXIT_OK


def cmd_group(args) -> int:
    elements = [parse_element(s) for s in args.elements]
    if args.op == "mul":
        result = product(elements)
    elif args.op == "inv":
        if len(elements) != 1:
            raise UsageError("inv takes exactly one element")
        result = inverse(elements[0])
    else:
        if len(elements) != 2:
            raise UsageError("conj takes two elements g h and prints h g h^-1")
        result = conjugate(*elements)
    print(result)
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "eval": cmd_eval, "boundary": cmd_boundary, "group": cmd_group}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, LiteralError, CochainDomainError, NotInComplexError, ConfigError, ValueError) as exc:
        print(f"kleintc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
