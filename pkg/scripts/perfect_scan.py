#!/usr/bin/env python3
"""Exhaustive perfect-number scan with optional checkpointed resume.

Example (the classical desk-scale run):
    python scripts/perfect_scan.py --lo 2 --hi 100000000 --jobs 4 \
        --checkpoint /tmp/perfect.ckpt
"""

import argparse
import os

from opnkit.scan import scan_perfect


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=2)
    ap.add_argument("--hi", type=int, default=10**8)
    ap.add_argument("--parity", choices=("all", "odd", "even"), default="all")
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--checkpoint", default=None)
    args = ap.parse_args()

    report = scan_perfect(
        args.lo, args.hi, args.parity, jobs=args.jobs, checkpoint=args.checkpoint
    )
    print(f"scanned [{report.range_lo}, {report.range_hi}] "
          f"({report.tested_count} {args.parity} integers) "
          f"in {report.elapsed_seconds:.1f}s")
    if report.violations:
        for n, detail in report.violations:
            print(f"  {n}: {detail}")
    else:
        print("  no perfect numbers in range")


if __name__ == "__main__":
    main()
