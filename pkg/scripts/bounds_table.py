#!/usr/bin/env python3
"""Print the lower/upper bound table for a range of r values.

Example:
    python scripts/bounds_table.py --max-r 12 --digits 12
"""

import argparse

from opnkit.bounds import bounds_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-r", type=int, default=12)
    ap.add_argument("--digits", type=int, default=12)
    args = ap.parse_args()

    bits = args.digits * 4 + 16
    header = f"{'r':>5}  {'radical >':<{args.digits + 8}}  {'prime sum >':<{args.digits + 8}}  N <"
    print(header)
    print("-" * len(header))
    for r in range(1, args.max_r + 1):
        rep = bounds_report(r, bits)
        lo_a, _ = rep.radical_lb.to_decimal_pair(args.digits)
        lo_b, _ = rep.prime_sum_lb.to_decimal_pair(args.digits)
        print(f"{r:>5}  {lo_a:<{args.digits + 8}}  {lo_b:<{args.digits + 8}}  2^{rep.n_ub.log2}")


if __name__ == "__main__":
    main()
