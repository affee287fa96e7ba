"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 budget exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import canonical, checks, invariants, stats
from .errors import DEFAULT_DEGREE_BUDGET, DEFAULT_GROUP_BUDGET, DEFAULT_TUPLE_BUDGET, EnumerationLimitError, check_budget
from .group import parse_window
from .qseries import TruncatedSeries

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_FAILED = 0, 1, 2, 3

# per-check parameters and their defaults when a flag is omitted
CHECK_PARAMS = {
    "claim-2.1": {"n": 5},
    "thm-2.2": {"n": 4},
    "thm-2.2-negative": {"m": 3, "n": 2},
    "phi-2.2": {"n": 3},
    "thm-3.1": {"m": 3, "n": 3},
    "lemma-3.2": {"m": 3, "n": 3},
    "thm-4.1": {"m": 2, "n": 2, "t": 2, "d": 8},
    "gg1": {"t": 2, "n": 3, "d": 8},
    "gg2": {"n": 5, "blocks": 2},
    "claim-5.1": {"m": 2, "n": 2, "t": 2, "cap": 4},
    "claim-5.2": {"m": 2, "n": 2, "t": 2, "d": 3},
    "bijection-5.4": {"m": 2, "n": 2, "t": 2},
    "example-5.5": {"n": 2},
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _budgets(p):
    p.add_argument("--budget-group", type=int, default=DEFAULT_GROUP_BUDGET, help="max group order to enumerate")
    p.add_argument("--budget-tuples", type=int, default=DEFAULT_TUPLE_BUDGET, help="max number of group tuples")
    p.add_argument("--budget-degree", type=int, default=DEFAULT_DEGREE_BUDGET, help="max series truncation degree")


def build_parser():
    parser = _Parser(prog="flagmajor", description="Flag-major index toolkit for C_m wr S_n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stats", help="distribution of a statistic over the whole group")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=stats.STATS, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--s0-only", action="store_true", help="length counts s_0 but not s_0^-1 as a step")
    _budgets(p)

    p = sub.add_parser("decompose", help="canonical exponents and flag-major of one element")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--perm", required=True, help='window such as "2^1,1^0" (or "-2,1" when m = 2)')

    p = sub.add_parser("hilbert", help="Hilbert series and the flag-major tuple sum")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--which", choices=("dia", "tia", "ratio", "rhs"), required=True)
    p.add_argument("--convention", choices=("left", "right"), default="left")
    _budgets(p)

    p = sub.add_parser("verify", help="run a named exhaustive check")
    p.add_argument("check", help=f"one of: {', '.join(CHECK_PARAMS)}")
    for name in ("m", "n", "t", "d", "cap", "blocks"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--convention", choices=("left", "right"), default="left")
    p.add_argument("--s0-only", action="store_true")
    _budgets(p)
    return parser


def cmd_stats(args, out):
    dist = stats.distribution(args.n, args.m, args.stat, not args.s0_only, args.budget_group)
    out.write(dist.to_csv() if args.format == "csv" else dist.to_json() + "\n")
    return EXIT_OK


def cmd_decompose(args, out):
    try:
        pi = parse_window(args.perm, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.n is not None and pi.n != args.n:
        raise UsageError(f"window has {pi.n} letters but --n is {args.n}")
    word = canonical.decompose(pi)
    out.write(json.dumps({"k": list(word.exponents), "flag_major": sum(word.exponents)}) + "\n")
    return EXIT_OK


def cmd_hilbert(args, out):
    check_budget("truncation degree", args.d, args.budget_degree)
    m, n, t, d = args.m, args.n, args.t, args.d
    if args.which == "tia":
        series = invariants.hilbert_tia(m, n, t, d)
    elif args.which == "dia":
        series = invariants.hilbert_dia(m, n, t, d)
    elif args.which == "ratio":
        series = invariants.hilbert_ratio(m, n, t, d)
    else:
        poly = invariants.tuple_flag_major_sum(m, n, t, args.convention, args.budget_tuples)
        series = TruncatedSeries(poly, d)
    out.write(series.to_json() + "\n")
    return EXIT_OK


def run_check(name, args):
    if name not in CHECK_PARAMS:
        raise UsageError(f"unknown check {name!r}; expected one of {', '.join(CHECK_PARAMS)}")
    params = {}
    for key, default in CHECK_PARAMS[name].items():
        value = getattr(args, key, None)
        params[key] = default if value is None else value
    if "d" in params:
        check_budget("truncation degree", params["d"], args.budget_degree)
    g, tb = args.budget_group, args.budget_tuples
    p = params
    if name == "claim-2.1":
        return checks.flag_major_equals_major(p["n"], g)
    if name == "thm-2.2":
        return checks.length_equidistribution(p["n"], not args.s0_only, g)
    if name == "thm-2.2-negative":
        return checks.length_equidistribution_fails(p["m"], p["n"], not args.s0_only, g)
    if name == "phi-2.2":
        return checks.coset_bijection(p["n"], g)
    if name == "thm-3.1":
        return checks.flag_major_formula(p["m"], p["n"], g)
    if name == "lemma-3.2":
        return checks.top_step_increment(p["m"], p["n"], g)
    if name == "thm-4.1":
        return checks.hilbert_ratio_identity(p["m"], p["n"], p["t"], p["d"], args.convention, tb)
    if name == "gg1":
        return checks.t_partite_identity(p["t"], p["n"], p["d"], tb)
    if name == "gg2":
        return checks.shuffle_identity(p["n"], p["blocks"])
    if name == "claim-5.1":
        return checks.projection_support(p["m"], p["n"], p["t"], p["cap"], g)
    if name == "claim-5.2":
        return checks.projection_orbits(p["m"], p["n"], p["t"], p["d"], g)
    if name == "bijection-5.4":
        return checks.tuple_data_bijection(p["m"], p["n"], p["t"], tb)
    return checks.signed_example(p["n"], g)


def cmd_verify(args, out):
    report = run_check(args.check, args)
    out.write(report.to_json() + "\n")
    print(report.line(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {"stats": cmd_stats, "decompose": cmd_decompose, "hilbert": cmd_hilbert, "verify": cmd_verify}


def _join_perm(argv):
    # "--perm -2,1" would otherwise be read as an unknown option
    argv = list(argv)
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--perm" and i + 1 < len(argv):
            out.append(f"--perm={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    argv = _join_perm(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    for key in ("m", "n", "t"):
        value = getattr(args, key, None)
        if value is not None and value < 1:
            print(f"flagmajor: error: --{key} must be positive", file=sys.stderr)
            return EXIT_USAGE
    for key in ("d", "cap", "blocks"):
        value = getattr(args, key, None)
        if value is not None and value < 0:
            print(f"flagmajor: error: --{key} must be nonnegative", file=sys.stderr)
            return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        print(f"flagmajor: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except EnumerationLimitError as exc:
        print(f"flagmajor: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
