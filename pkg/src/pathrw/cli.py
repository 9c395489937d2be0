"""Command-line front end.

Exit codes: 0 success, 1 semantic negative (distinct, failed check, wrong
space), 2 usage / parse / environment error, 3 rewrite budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .checks import SUITES
from .engine import DEFAULT_BUDGET, normalize, rw_equal
from .env import circle_env, parse_env
from .errors import (
    BudgetExceeded, EndpointMismatch, EnvironmentError_, NotCirclePath, PathError,
    PathSyntaxError, UnknownAtom,
)
from .generate import CIRCLE_WEIGHTS, GENERIC_WEIGHTS, GROUPOID_WEIGHTS, RHO_ONLY_WEIGHTS, random_term
from .rules import catalog
from .spaces import winding
from .syntax import parse_path, print_path

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

WEIGHTS = {"generic": GENERIC_WEIGHTS, "circle": CIRCLE_WEIGHTS,
           "rho": RHO_ONLY_WEIGHTS, "groupoid": GROUPOID_WEIGHTS}


def _positive(text: str) -> int:
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--env", metavar="FILE", help="environment file (default: the circle)")
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    common.add_argument("--ext", action="store_true", help="enable the extensionality rules")
    common.add_argument("--trace", choices=["text", "json"], default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=None)

    ap = argparse.ArgumentParser(prog="pathrw", description="Rewriting of computational paths.")
    sub = ap.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("normalize", parents=[common], help="print the normal form")
    p.add_argument("expr")
    p = sub.add_parser("equal", parents=[common], help="decide rw-equality")
    p.add_argument("expr1")
    p.add_argument("expr2")
    p = sub.add_parser("winding", parents=[common], help="winding number of a circle path")
    p.add_argument("expr")
    p = sub.add_parser("rules", parents=[common], help="show the rule catalog")
    p.add_argument("action", nargs="?", default="list", choices=["list"])
    p = sub.add_parser("check", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p = sub.add_parser("random", parents=[common], help="print random well-formed terms")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--weights", choices=sorted(WEIGHTS), default="generic")
    return ap


def _load_env(args):
    if args.env is None:
        return circle_env()
    return parse_env(Path(args.env).read_text())


def _cmd_normalize(args, env, out) -> int:
    try:
        tr = normalize(parse_path(args.expr, env), args.budget, args.ext)
    except BudgetExceeded as e:
        if args.trace == "json":
            print(e.trace.to_json(), file=out)
        elif args.trace == "text":
            print(e.trace.to_text(), file=out)
        raise
    if args.trace == "json":
        print(tr.to_json(), file=out)
    elif args.trace == "text":
        print(tr.to_text(), file=out)
    else:
        print(print_path(tr.result), file=out)
    return EXIT_OK


def _cmd_equal(args, env, out) -> int:
    p, q = parse_path(args.expr1, env), parse_path(args.expr2, env)
    try:
        same = rw_equal(p, q, args.budget, args.ext)
    except EndpointMismatch as e:
        print(f"distinct ({e})", file=out)
        return EXIT_NEGATIVE
    print("equal" if same else "distinct", file=out)
    return EXIT_OK if same else EXIT_NEGATIVE


def _cmd_winding(args, env, out) -> int:
    print(winding(parse_path(args.expr, env), args.budget), file=out)
    return EXIT_OK


def _cmd_rules(args, env, out) -> int:
    rows = [(str(r.id), r.name, r.group, r.lhs, r.rhs) for r in catalog(include_ext=True)]
    head = ("id", "name", "group", "lhs", "rhs")
    widths = [max(len(x[i]) for x in [head, *rows]) for i in range(4)]
    for row in [head, *rows]:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)) + "  " + row[4], file=out)
    return EXIT_OK


def _cmd_check(args, env, out) -> int:
    rep = SUITES[args.suite](args.seed, args.samples)
    print(rep.to_text(), file=out)
    return EXIT_OK if rep.ok else EXIT_NEGATIVE


def _cmd_random(args, env, out) -> int:
    for i in range(args.samples or 1):
        p = random_term(env, args.depth, WEIGHTS[args.weights], seed=args.seed + i,
                        max_size=args.max_size)
        print(print_path(p), file=out)
    return EXIT_OK


COMMANDS = {"normalize": _cmd_normalize, "equal": _cmd_equal, "winding": _cmd_winding,
            "rules": _cmd_rules, "check": _cmd_check, "random": _cmd_random}


def main(argv=None, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    # a bare --trace means the line format; only --trace=FORMAT takes a value
    argv = ["--trace=text" if a == "--trace" else a for a in argv]
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        env = _load_env(args)
        return COMMANDS[args.cmd](args, env, out)
    except BudgetExceeded as e:
        print(f"error: {e}", file=err)
        return EXIT_BUDGET
    except (PathSyntaxError, UnknownAtom, EnvironmentError_, OSError) as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except (NotCirclePath, PathError) as e:
        print(f"error: {e}", file=err)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
