"""Command-line surface: eval, table, synth, period, verify, bench.

Exit codes: 0 success, 1 verification/UNSAT failure, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import core, evaluator, synthesis, verification
from .errors import ClockError
from .truthtable import TruthTable

DEFAULT_TABLE_BIT_CAP = 1 << 24


def _read_table_arg(text: str) -> TruthTable:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="ascii") as fh:
            text = "".join(fh.read().split())
    return TruthTable.from_string(text)


def cmd_eval(args: argparse.Namespace) -> int:
    s = core.parse_sum(args.sum, args.mod)
    print(core.sum_eval(s, args.index))
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    if args.arity < 1 or (1 << args.arity) > args.max_bits:
        raise ClockError(f"arity {args.arity} outside supported range (cap {args.max_bits} bits)")
    s = core.parse_sum(args.sum, 2)
    print(evaluator.truth_table_of(s, args.arity, workers=args.workers).bits)
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    try:
        table = _read_table_arg(args.table)
    except ValueError as exc:
        raise ClockError(str(exc)) from exc
    if args.method == "single":
        report = synthesis.synthesize_single_prime(
            table, prime=args.prime, force_three_mod_four=args.force_3mod4
        )
    else:
        if not args.primes:
            raise ClockError("--method basis requires --primes")
        report = synthesis.synthesize_over_basis(
            table, args.primes, minimize=args.minimize, budget=args.budget
        )
        if report is None:
            print("UNSAT")
            return 1
    check = evaluator.truth_table_of(report.sum, table.arity)
    if check.bits != table.bits:
        print("round-trip verification failed", file=sys.stderr)
        return 1
    print(core.format_sum(report.sum))
    return 0


def cmd_period(args: argparse.Namespace) -> int:
    s = core.parse_sum(args.sum, args.mod)
    print(core.period(s, guard=args.guard))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = verification.run_suite(args.suite, max_prime=args.max_prime)
    failures = 0
    for r in results:
        if r.ok:
            print(f"PASS {r.name}")
        else:
            failures += 1
            detail = f" ({r.detail})" if r.detail else ""
            print(f"FAIL {r.name}{detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


def cmd_bench(args: argparse.Namespace) -> int:
    s = core.parse_sum(args.sum, 2)
    start = time.perf_counter()
    serial = evaluator.truth_table_of(s, args.arity, workers=1, variant="xor")
    serial_time = time.perf_counter() - start
    start = time.perf_counter()
    parallel = evaluator.truth_table_of(s, args.arity, workers=args.workers, variant=args.variant)
    parallel_time = time.perf_counter() - start
    identical = serial.bits == parallel.bits
    print(f"serial   {serial_time:.4f}s  ({1 << args.arity} indices, {len(s)} clocks, variant=xor)")
    print(f"parallel {parallel_time:.4f}s  (workers={args.workers}, variant={args.variant})")
    print(f"identical: {'yes' if identical else 'NO'}")
    return 0 if identical else 1


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primeclocks", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a clock sum at one index")
    p.add_argument("--sum", required=True, help="clock sum, e.g. '[7,3]+[13,6]' or '0'")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--mod", type=int, default=2)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="print the first 2^arity bits of a modulus-2 sum")
    p.add_argument("--sum", required=True)
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-bits", type=int, default=DEFAULT_TABLE_BIT_CAP)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("synth", help="synthesize a clock sum computing a truth table")
    p.add_argument("--table", required=True, help="bit string or @file")
    p.add_argument("--method", choices=("single", "basis"), default="single")
    p.add_argument("--prime", type=int, default=None)
    p.add_argument("--primes", type=_int_list, default=None)
    p.add_argument("--force-3mod4", action="store_true")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--budget", type=int, default=synthesis.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("period", help="minimal period of a clock sum")
    p.add_argument("--sum", required=True)
    p.add_argument("--mod", type=int, default=2)
    p.add_argument("--guard", type=int, default=core.DEFAULT_PERIOD_GUARD)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", choices=verification.SUITES, required=True)
    p.add_argument("--max-prime", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time serial vs partitioned table extraction")
    p.add_argument("--sum", required=True)
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--workers", type=int, default=4)
    p.add_argument("--variant", choices=evaluator.VARIANTS, default="xor")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ClockError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
