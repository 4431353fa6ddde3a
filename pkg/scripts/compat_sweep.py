#!/usr/bin/env python3
"""Sweep the compatibility grid and summarize criterion-vs-search agreement.

Usage: python scripts/compat_sweep.py [--m-max 6] [--n-max 12] [--csv]
"""

import argparse

from apnforge.compatibility import reports_to_csv, sweep_reports


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m-max", type=int, default=6)
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--csv", action="store_true", help="dump the raw rows too")
    args = ap.parse_args()

    rows = sweep_reports(range(1, args.m_max + 1), range(1, args.n_max + 1))
    if args.csv:
        print(reports_to_csv(rows), end="")

    compatible = [r for r in rows if r.exists_c]
    mismatched = [r for r in rows if not r.consistent]
    print(f"{len(rows)} pairs: {len(compatible)} with a compatible c, "
          f"{len(rows) - len(compatible)} without, {len(mismatched)} criterion mismatches")
    total_tested = sum(r.search_size for r in rows)
    print(f"candidates examined across all searches: {total_tested}")
    if compatible:
        worst = max(compatible, key=lambda r: r.search_size)
        print(f"slowest successful search: (m={worst.m}, n={worst.n}) "
              f"took {worst.search_size} candidates")
    for r in mismatched:
        print(f"  MISMATCH at (m={r.m}, n={r.n}): predicate={r.predicate} exists={r.exists_c}")


if __name__ == "__main__":
    main()
