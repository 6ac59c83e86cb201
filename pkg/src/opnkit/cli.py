"""Command-line front end: bound tables, candidate audits, verification
suites, and perfect-number scans, in text or single-document JSON.

Exit codes are a stable contract:
  0  success (audit Viable, verify clean, scan/sk/bounds completed)
  1  audit Refuted, or a verify suite found violations
  2  invalid arguments or unparseable factorization
  3  audit Undecided
  4  unreadable checkpoint file
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .arith import NonPrimeFactorError, ParseError, parse_factorization, render
from .arith import elementary_symmetric, symmetric_reciprocal_sums
from .bounds import DEFAULT_PRECISION_CAP_BITS, DEFAULT_REPORT_DIGITS, bounds_report
from .checks import SUITES, run_verify_suite
from .constraints import Overall, audit, explain
from .scan import BLOCK_SIZE_DEFAULT, CheckpointError, scan_perfect

PRECISION_CAP_ENV = "OPNKIT_PRECISION_CAP"

_DIGIT_SAFETY_BITS = 8


def _dumps(obj) -> str:
    """Canonical JSON: parsing and re-rendering reproduces identical bytes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _digits_to_bits(digits: int) -> int:
    return math.ceil(digits * math.log2(10)) + _DIGIT_SAFETY_BITS


def _default_precision_cap() -> int:
    raw = os.environ.get(PRECISION_CAP_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_PRECISION_CAP_BITS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opnkit",
        description="Exact and certified-interval checks around odd perfect numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="lower/upper bound table for a given r")
    p_bounds.add_argument("-r", type=int, required=True, help="number of distinct prime factors")
    p_bounds.add_argument("--digits", type=int, default=DEFAULT_REPORT_DIGITS,
                          help="significant decimal digits in the report (default 50)")
    p_bounds.add_argument("--format", choices=("text", "json"), default="text")

    p_check = sub.add_parser("check", help="audit a candidate factorization")
    p_check.add_argument("factorization", help='e.g. "3^2*5*7^2"')
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.add_argument("--precision-cap", type=int, default=_default_precision_cap(),
                         help=f"interval refinement cap in bits (env {PRECISION_CAP_ENV})")
    p_check.add_argument("--start-bits", type=int, default=64,
                         help="starting precision for interval refinement")

    p_verify = sub.add_parser("verify", help="run a property-verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--trials", type=int, default=10_000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--limit", type=int, default=100_000,
                          help="exhaustive ceiling for the chain suite")
    p_verify.add_argument("--precision-cap", type=int, default=_default_precision_cap())
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_scan = sub.add_parser("scan", help="exhaustive perfect-number scan of a range")
    p_scan.add_argument("--lo", type=int, required=True)
    p_scan.add_argument("--hi", type=int, required=True)
    p_scan.add_argument("--parity", choices=("all", "odd", "even"), default="all")
    p_scan.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p_scan.add_argument("--block-size", type=int, default=BLOCK_SIZE_DEFAULT)
    p_scan.add_argument("--checkpoint", help="JSON-lines file of completed blocks (resumable)")
    p_scan.add_argument("--format", choices=("text", "json"), default="text")

    p_sk = sub.add_parser("sk", help="reciprocal symmetric sums S_1..S_r of a factorization")
    p_sk.add_argument("factorization")
    p_sk.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _cmd_bounds(args) -> int:
    if args.r < 1:
        print("error: r must be >= 1", file=sys.stderr)
        return 2
    if args.digits < 1:
        print("error: --digits must be >= 1", file=sys.stderr)
        return 2
    report = bounds_report(args.r, _digits_to_bits(args.digits))
    if args.format == "json":
        print(_dumps(report.to_json_dict(args.digits)))
        return 0
    lo_a, hi_a = report.radical_lb.to_decimal_pair(args.digits)
    lo_b, hi_b = report.prime_sum_lb.to_decimal_pair(args.digits)
    lo_n, hi_n = report.n_lb.to_decimal_pair(args.digits)
    print(f"r: {report.r}")
    print(f"precision: {report.precision_bits} bits (~{args.digits} digits)")
    print(f"radical lower bound:   [{lo_a}, {hi_a}]")
    print(f"prime-sum lower bound: [{lo_b}, {hi_b}]")
    print(f"N lower bound:         [{lo_n}, {hi_n}]")
    print(f"N upper bound:         2^(4^{report.r}) = 2^{report.n_ub.log2}")
    return 0


def _parse_or_complain(text: str):
    try:
        return parse_factorization(text)
    except (ParseError, NonPrimeFactorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None


def _cmd_check(args) -> int:
    f = _parse_or_complain(args.factorization)
    if f is None:
        return 2
    report = audit(f, precision_cap_bits=args.precision_cap, start_bits=args.start_bits)
    if args.format == "json":
        print(_dumps(report.to_json_dict()))
    else:
        print(f"candidate: {render(f)}")
        print(explain(report))
    return {Overall.VIABLE: 0, Overall.REFUTED: 1, Overall.UNDECIDED: 3}[report.overall]


def _cmd_verify(args) -> int:
    if args.trials < 1 or args.limit < 3:
        print("error: --trials must be >= 1 and --limit >= 3", file=sys.stderr)
        return 2
    result = run_verify_suite(
        args.suite,
        trials=args.trials,
        seed=args.seed,
        limit=args.limit,
        precision_cap_bits=args.precision_cap,
    )
    if args.format == "json":
        print(_dumps(result.to_json_dict()))
    else:
        print(f"suite: {result.suite}")
        print(f"checked: {result.checked}")
        print(f"violations: {len(result.violations)}")
        for v in result.violations:
            print(f"  counterexample: {v}")
    return 0 if result.passed else 1


def _cmd_scan(args) -> int:
    try:
        report = scan_perfect(
            args.lo,
            args.hi,
            args.parity,
            jobs=args.jobs,
            block_size=args.block_size,
            checkpoint=args.checkpoint,
        )
    except CheckpointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(_dumps(report.to_json_dict()))
    else:
        print(f"range: [{report.range_lo}, {report.range_hi}] parity={args.parity}")
        print(f"tested: {report.tested_count}")
        print(f"found: {len(report.violations)}")
        for n, detail in report.violations:
            print(f"  {n}: {detail}")
        print(f"elapsed: {report.elapsed_seconds:.2f}s")
    return 0


def _cmd_sk(args) -> int:
    f = _parse_or_complain(args.factorization)
    if f is None:
        return 2
    sums = symmetric_reciprocal_sums(f)
    coeffs = elementary_symmetric(f.primes)
    identity_lhs = coeffs[len(f.primes)] + sum(
        coeffs[len(f.primes) - k] for k in range(1, len(f.primes) + 1)
    )  # radical * (1 + sum S_k), cleared of denominators
    identity_rhs = math.prod(p + 1 for p in f.primes)
    if args.format == "json":
        doc = {
            "factorization": render(f),
            "sums": [
                {"k": k, "numerator": s.numerator, "denominator": s.denominator}
                for k, s in enumerate(sums, start=1)
            ],
            "identity": {
                "radical_times_one_plus_sum": identity_lhs,
                "product_of_one_plus_p": identity_rhs,
                "holds": identity_lhs == identity_rhs,
            },
        }
        print(_dumps(doc))
        return 0
    for k, s in enumerate(sums, start=1):
        print(f"S_{k} = {s.numerator}/{s.denominator}")
    print(
        f"identity check: radical*(1 + sum S_k) = {identity_lhs}, "
        f"prod(1 + p) = {identity_rhs} -> {'ok' if identity_lhs == identity_rhs else 'MISMATCH'}"
    )
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "bounds": _cmd_bounds,
        "check": _cmd_check,
        "verify": _cmd_verify,
        "scan": _cmd_scan,
        "sk": _cmd_sk,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
