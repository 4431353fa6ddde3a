#!/usr/bin/env python3
"""Fiber-size census across every coefficient c for one exponent pair.

For each c in F_{2^(2m)} this builds the hexanomial with the canonical d,
computes the full derivative spectrum, and tallies the attained fiber
sizes -- split by whether c is compatible.  Compatible c must come out
uniformly 2^gcd(m,n)-to-one; what incompatible c do is an empirical
question this script lets you eyeball.

Usage: python scripts/fiber_census.py --m 2 --n 1
"""

import argparse
from collections import Counter

from apnforge.compatibility import is_compatible_c
from apnforge.differential import derivative_spectrum
from apnforge.field import make_field
from apnforge.hexanomial import BCParams, default_d


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, required=True)
    ap.add_argument("--n", type=int, required=True)
    args = ap.parse_args()

    f = make_field(2 * args.m)
    d = default_d(f, args.m)
    census: dict[bool, Counter] = {True: Counter(), False: Counter()}
    for c in f.elements():
        p = BCParams(m=args.m, n=args.n, field=f, c=c, d=d)
        spec = derivative_spectrum(p)
        attained = tuple(sorted({t for a in spec.histograms for t in spec.fiber_sizes(a)}))
        census[is_compatible_c(c, args.m, args.n, f)][attained] += 1

    u = 1 << p.k
    print(f"(m, n) = ({args.m}, {args.n}), field degree {f.w}, "
          f"d = {f.element_hex(d)}, expected uniform size {u}")
    for compatible in (True, False):
        label = "compatible" if compatible else "incompatible"
        total = sum(census[compatible].values())
        print(f"{label} c ({total}):")
        for attained, count in sorted(census[compatible].items()):
            print(f"  fiber sizes {list(attained)}: {count} coefficient(s)")


if __name__ == "__main__":
    main()
