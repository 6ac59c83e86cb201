#!/usr/bin/env python3
"""Verify the radical-abundancy relation exhaustively over a range of odd n:
strict increase from the radical for non-squarefree n, equality otherwise.

Example:
    python scripts/radical_chain_scan.py --lo 3 --hi 1000000 --jobs 2
"""

import argparse
import os

from opnkit.scan import scan_radical_chain


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=3)
    ap.add_argument("--hi", type=int, default=10**6)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--checkpoint", default=None)
    args = ap.parse_args()

    report = scan_radical_chain(args.lo, args.hi, jobs=args.jobs, checkpoint=args.checkpoint)
    print(f"checked {report.tested_count} odd integers in "
          f"[{report.range_lo}, {report.range_hi}] in {report.elapsed_seconds:.1f}s")
    if report.violations:
        print(f"VIOLATIONS ({len(report.violations)}):")
        for n, detail in report.violations:
            print(f"  {n}: {detail}")
    else:
        print("  no violations (as the theory requires)")


if __name__ == "__main__":
    main()
