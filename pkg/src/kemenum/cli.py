"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 profile parse error,
3 resource limit exceeded, 4 invalid or inconsistent flags.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import verify as verify_mod
from .core import check_ranking, unanimity_order
from .decomposition import build_decomposition
from .errors import BudgetExceededError, ProfileFormatError
from .experiments import SweepSpec, emit_csv, run_sweep
from .fileio import format_profile, format_solutions, parse_preflib, parse_ranking_line, parse_profile, read_profile
from .mallows import MallowsConfig, sample_profile
from .parameters import non_unanimity_graph, parameter_report
from .solvers import ALGORITHMS, Approx, Budget, Opt, solve

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_RESOURCE, EXIT_FLAGS = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def cmd_params(args, out):
    profile = read_profile(args.input)
    rep = parameter_report(profile)
    order = unanimity_order(profile)
    width = build_decomposition(order, non_unanimity_graph(profile)).width
    print(f"max_range={rep.max_range}", file=out)
    print(f"avg_kt={rep.avg_kt}", file=out)
    print(f"avg_kt_decimal={rep.avg_kt_decimal}", file=out)
    print(f"unanimity_width={rep.unanimity_width}", file=out)
    print(f"blocking_size={rep.blocking_size}", file=out)
    print(f"consensus_distance={rep.consensus_distance}", file=out)
    print(f"decomposition_width={width}", file=out)
    return EXIT_OK


def cmd_solve(args, out):
    if args.k is not None and args.lam is not None:
        raise UsageError("--k and --lambda are mutually exclusive")
    if args.r < 1:
        raise UsageError("--r must be at least 1")
    if args.k is not None:
        if args.k < 0:
            raise UsageError("--k must be non-negative")
        mode = Budget(args.k)
    elif args.lam is not None:
        try:
            lam = Fraction(args.lam)
        except ValueError:
            raise UsageError(f"invalid --lambda {args.lam!r}") from None
        if lam < 1:
            raise UsageError("--lambda must be at least 1")
        mode = Approx(lam)
    else:
        mode = Opt()
    profile = read_profile(args.input)
    try:
        entries = solve(profile, mode, args.r, args.algorithm, escalate=args.escalate)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(format_solutions(entries, profile))
    print(f"found {len(entries)} of requested {args.r}", file=sys.stderr)
    return EXIT_OK


def cmd_sample(args, out):
    if not args.theta > 0:
        raise UsageError("theta must be positive")
    if args.m < 1 or args.n < 1:
        raise UsageError("--m and --n must be positive")
    if args.central == "identity":
        central = tuple(range(args.m))
    else:
        with open(args.central, encoding="utf-8") as fh:
            text = fh.read()
        first = text.splitlines()[0].split() if text.strip() else []
        if len(first) == 2 and all(f.isdigit() for f in first):
            central = parse_profile(text).votes[0]
        else:
            central = parse_ranking_line(text.strip().splitlines()[0])
        if len(central) != args.m:
            raise UsageError(f"central ranking has {len(central)} candidates, --m is {args.m}")
        central = check_ranking(central, args.m)
    cfg = MallowsConfig(central, args.theta, args.seed)
    out.write(format_profile(sample_profile(cfg, args.n)))
    return EXIT_OK


def cmd_experiment(args, out):
    try:
        spec = SweepSpec(args.m, tuple(args.voters), tuple(args.thetas), args.samples, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = emit_csv(run_sweep(spec))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_verify(args, out):
    if args.m_max > 8 or args.m_max < 1:
        raise UsageError("--m-max must be between 1 and 8")
    if args.n_max < 1 or args.trials < 0:
        raise UsageError("--n-max must be positive and --trials non-negative")
    report = verify_mod.run_verification(args.m_max, args.n_max, args.trials, args.seed)
    print(f"trials={report.trials} checks={report.checks}", file=out)
    if report.passed:
        print("PASS", file=out)
        return EXIT_OK
    profile, problems = report.failures[0]
    print("FAIL", file=out)
    for p in problems:
        print(p, file=out)
    print("counterexample:", file=out)
    out.write(format_profile(profile))
    return EXIT_VERIFY


def cmd_preflib(args, out):
    with open(args.input, encoding="utf-8") as fh:
        profile = parse_preflib(fh.read())
    out.write(format_profile(profile))
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="kemenum", description="Distinct Kemeny rankings and profile parameters.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("params", help="print the five structural parameters of a profile")
    p.add_argument("input")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("solve", help="enumerate distinct optimal or near-optimal rankings")
    p.add_argument("input")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="subset-dp")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--escalate", action="store_true", help="find the optimum by trying k = 0, 1, 2, ...")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sample", help="sample a Mallows profile")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--central", default="identity")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("experiment", help="parameter sweep over theta and voter count, as CSV")
    defaults = SweepSpec()
    p.add_argument("--m", type=int, default=defaults.m)
    p.add_argument("--voters", type=int, nargs="+", default=list(defaults.voter_counts))
    p.add_argument("--thetas", type=float, nargs="+", default=list(defaults.thetas))
    p.add_argument("--samples", type=int, default=defaults.samples_per_cell)
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--out")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("verify", help="check all solvers against brute force on random profiles")
    p.add_argument("--m-max", type=int, default=5)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("preflib", help="convert a PrefLib .soc file to a profile file")
    p.add_argument("input")
    p.set_defaults(func=cmd_preflib)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FLAGS
    except ProfileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
