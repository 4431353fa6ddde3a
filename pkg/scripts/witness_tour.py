#!/usr/bin/env python3
"""Walk every unity root y != 1 for a pair (m, n) and print its witnesses.

Each row shows the closed-form incompatible coefficients at y, where they
live (subfield F_r, unity-root subgroup, or both), and re-checks that the
compatibility polynomial really vanishes there.

Usage: python scripts/witness_tour.py --m 3 --n 2
"""

import argparse

from apnforge.compatibility import eval_compat_poly, vanishing_coeff_set, witnesses
from apnforge.field import make_field, roots_of_unity


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, required=True)
    ap.add_argument("--n", type=int, required=True)
    args = ap.parse_args()

    m, n = args.m, args.n
    f = make_field(2 * m)
    r = 1 << m
    mu = roots_of_unity(f, r + 1)
    print(f"(m, n) = ({m}, {n}): {len(mu) - 1} unity roots beyond 1, field degree {f.w}")
    all_ok = True
    for y in mu:
        if y == 1:
            continue
        ws = witnesses(y, m, n, f)
        X = vanishing_coeff_set(y, m, n, f)
        marks = []
        for wv in ws:
            where = "F_r" if f.in_subfield(wv, m) else "mu"
            ok = eval_compat_poly(f, m, n, wv, y) == 0 and wv in X
            all_ok &= ok
            marks.append(f"{f.element_hex(wv)}[{where}]{'' if ok else '!!'}")
        print(f"  y={f.element_hex(y)}: witnesses {' '.join(marks)}  |X_y|={len(X)}")
    print("all witnesses vanish" if all_ok else "SOME WITNESS FAILED")


if __name__ == "__main__":
    main()
