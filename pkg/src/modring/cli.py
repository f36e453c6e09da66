"""Command-line front end: ``modring expand|dim|basis|hilbert|verify``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors (unknown subcommand, flag, form or level).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .catalog import UnknownForm, default_catalog
from .hilbert import DEFAULT_ORDER, dim_series
from .integrality import DEFAULT_PRECISION
from .presentation import DEFAULT_MAX_WEIGHT, complement_hilbert
from .relations import DEFAULT_MARGIN
from .report import Check, first_failure
from .spaces import LEVELS, UnsupportedLevel, basis, dim, verify_echelon
from .suites import SUITES, run_suite

DEFAULT_EXPAND_PREC = 50


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    def shared(default):
        # accepted before or after the subcommand; the subcommand copy must not
        # overwrite a value given before it
        g = argparse.ArgumentParser(add_help=False)
        g.add_argument("--json", action="store_true",
                       default=False if default else argparse.SUPPRESS,
                       help="emit the machine-readable report")
        g.add_argument("--threads", type=int, default=1 if default else argparse.SUPPRESS,
                       help="worker threads for independent checks (output order is fixed)")
        return g

    common = shared(False)
    p = argparse.ArgumentParser(prog="modring", parents=[shared(True)],
                                description="Exact q-expansions and verification for "
                                            "rings of modular forms on Gamma0(N).")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    e = sub.add_parser("expand", parents=[common], help="print the q-expansion of a named form")
    e.add_argument("--form", required=True)
    e.add_argument("--prec", type=int, default=DEFAULT_EXPAND_PREC)
    e.add_argument("--level", type=int, help="require the form to live at this level")

    d = sub.add_parser("dim", parents=[common], help="dimension of M_k(N)")
    d.add_argument("--level", type=int, required=True)
    d.add_argument("--weight", type=int, required=True)

    b = sub.add_parser("basis", parents=[common], help="echelon basis of M_k(N)")
    b.add_argument("--level", type=int, required=True)
    b.add_argument("--weight", type=int, required=True)
    b.add_argument("--prec", type=int, help="default: max(dim + 1, %d)" % DEFAULT_EXPAND_PREC)

    h = sub.add_parser("hilbert", parents=[common],
                       help="Hilbert series of M(N) from the presentation vs the dimension formula")
    h.add_argument("--level", type=int, required=True)
    h.add_argument("--order", type=int, default=DEFAULT_ORDER)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.add_argument("--level", type=int)
    v.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
    v.add_argument("--prec", type=int, default=DEFAULT_PRECISION + 1,
                   help="precision for integrality (default %(default)s, i.e. through q^200)")
    v.add_argument("--margin", type=int, default=DEFAULT_MARGIN)
    v.add_argument("--order", type=int, default=DEFAULT_ORDER)
    return p


def _level(N: int | None) -> None:
    if N is not None and N not in LEVELS:
        raise UsageError(f"level {N} is not one of {', '.join(map(str, LEVELS))}")


# -- subcommands -------------------------------------------------------------------
# each returns (items, passed, text lines)

def _expand(args):
    if args.prec < 1:
        raise UsageError("--prec must be positive")
    _level(args.level)
    try:
        desc = default_catalog.descriptor(args.form)
    except UnknownForm as exc:
        raise UsageError(str(exc.args[0] if exc.args else exc))
    if args.level is not None and args.level % desc.level:
        raise UsageError(f"{args.form} has level {desc.level}, which does not divide {args.level}")
    f = default_catalog.resolve(args.form, args.prec)
    item = Check(args.form, args.level or desc.level, desc.weight, True, f.to_json())
    return [item], True, [str(f)]


def _dim(args):
    _level(args.level)
    d = dim(args.level, args.weight)
    return [Check(f"dim M_{args.weight}({args.level})", args.level, args.weight, True, d)], \
        True, [str(d)]


def _basis(args):
    _level(args.level)
    N, k = args.level, args.weight
    d = dim(N, k)
    prec = args.prec if args.prec is not None else max(d + 1, DEFAULT_EXPAND_PREC)
    if prec <= d:
        raise UsageError(f"--prec must exceed dim M_{k}({N}) = {d}")
    elems = basis(N, k, precision=prec)
    rep = verify_echelon(N, k, precision=prec)
    items = [Check(b.name, N, k, True, b.expansion.to_json()) for b in elems]
    items.append(Check(f"echelon M_{k}({N})", N, k, rep.passed, rep.to_dict()))
    lines = [f"{b.name} = {b.expansion}" for b in elems]
    lines.append(f"echelon: dim={rep.dim} monomials={rep.count} valuations={rep.valuations}"
                 + ("" if rep.passed else f" FAIL: {rep.offending}"))
    return items, rep.passed, lines


def _hilbert(args):
    _level(args.level)
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    N, T = args.level, args.order
    expr = complement_hilbert(N)
    rational = expr.expand(T)
    dims = dim_series(N, T)
    diff = [a - b for a, b in zip(rational, dims)]
    ok = not any(diff)
    lines = [f"H(M({N})) = {expr}",
             "rational: " + " ".join(map(str, rational)),
             "dims:     " + " ".join(map(str, dims)),
             "diff:     " + " ".join(map(str, diff))]
    item = Check(f"H(M({N})) = {expr}", N, None, ok,
                 {"rational": rational, "dims": dims, "diff": diff}, checked_order=T)
    return [item], ok, lines


def _verify(args):
    _level(args.level)
    if args.max_weight < 0 or args.max_weight % 2:
        raise UsageError("--max-weight must be a non-negative even integer")
    checks = run_suite(args.suite, level=args.level, margin=args.margin,
                       max_weight=args.max_weight, precision=args.prec,
                       order=args.order, threads=args.threads)
    ok = all(c.passed for c in checks)
    lines = [c.line() for c in checks]
    lines.append(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    bad = first_failure(checks)
    if bad is not None:
        lines.append(f"first failure: {bad.line()}")
    return checks, ok, lines


COMMANDS = {"expand": _expand, "dim": _dim, "basis": _basis,
            "hilbert": _hilbert, "verify": _verify}


def _parameters(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "json")}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        items, ok, lines = COMMANDS[args.command](args)
    except (UsageError, UnsupportedLevel, ValueError) as exc:
        print(f"modring {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        report = {"command": args.command, "parameters": _parameters(args),
                  "items": [c.to_dict() for c in items], "pass": ok}
        print(json.dumps(report, indent=2, default=str))
    else:
        print("\n".join(lines))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
