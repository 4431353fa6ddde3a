"""Naive reference implementations the library is tested against.

Everything here is written the slow, obvious way on purpose: carryless
multiply then reduce, exponentiation by squaring on big-int exponents
(never Frobenius composition), fiber counting with dict loops.  If the
library and this module agree, a shared bug would have to be duplicated
across two very different code paths.
"""

from collections import Counter


def deg(p):
    return p.bit_length() - 1


def clmul(a, b):
    acc = 0
    i = 0
    while b >> i:
        if (b >> i) & 1:
            acc ^= a << i
        i += 1
    return acc


def polyrem(p, m):
    while deg(p) >= deg(m):
        p ^= m << (deg(p) - deg(m))
    return p


def gfmul(a, b, mod):
    return polyrem(clmul(a, b), mod)


def gfpow(x, e, mod):
    """x**e by square-and-multiply; e may be a huge int, no order tricks."""
    acc = 1
    while e:
        if e & 1:
            acc = gfmul(acc, x, mod)
        x = gfmul(x, x, mod)
        e >>= 1
    return acc


def gfinv(x, mod):
    return gfpow(x, (1 << deg(mod)) - 2, mod)


def irreducible_by_trial_division(f):
    n = deg(f)
    if n <= 0:
        return False
    return all(polyrem(f, g) != 0 for g in range(2, 1 << (n // 2 + 1)))


def irreducible_by_products(f):
    """f is reducible iff it is a product of two smaller polynomials."""
    n = deg(f)
    if n <= 0:
        return False
    for dg in range(1, n // 2 + 1):
        for g in range(1 << dg, 1 << (dg + 1)):
            for h in range(1 << (n - dg), 1 << (n - dg + 1)):
                if clmul(g, h) == f:
                    return False
    return True


def unity_roots(mod, n):
    """Scan route: every nonzero z with z^n = 1."""
    size = 1 << deg(mod)
    return sorted(z for z in range(1, size) if gfpow(z, n, mod) == 1)


def subfield(mod, d):
    """Every x with x^(2^d) = x."""
    size = 1 << deg(mod)
    return sorted(x for x in range(size) if gfpow(x, 1 << d, mod) == x)


def hexanomial(m, n, c, d, x, mod):
    """F(x) with every exponent fed to big-int exponentiation."""
    r, s = 1 << m, 1 << n
    mul = lambda a, b: gfmul(a, b, mod)
    po = lambda b, e: gfpow(b, e, mod)
    return (
        mul(x, po(x, s) ^ po(x, r) ^ mul(c, po(x, r * s)))
        ^ mul(po(x, s), mul(po(c, r), po(x, r)) ^ mul(d, po(x, r * s)))
        ^ po(x, (s + 1) * r)
    )


def derivative(m, n, c, d, a, x, mod):
    ax = gfmul(a, x, mod)
    return (
        hexanomial(m, n, c, d, ax, mod)
        ^ hexanomial(m, n, c, d, ax ^ a, mod)
        ^ hexanomial(m, n, c, d, a, mod)
    )


def compat_poly(m, n, c, y, mod):
    r, s = 1 << m, 1 << n
    return (
        gfpow(y, s + 1, mod)
        ^ gfmul(c, gfpow(y, s, mod), mod)
        ^ gfmul(gfpow(c, r, mod), y, mod)
        ^ 1
    )


def fiber_histogram(m, n, c, d, a, mod):
    """{fiber size: #b} for x -> F(x) + F(x+a), the dict-loop way."""
    size = 1 << deg(mod)
    fibers = Counter(
        hexanomial(m, n, c, d, x, mod) ^ hexanomial(m, n, c, d, x ^ a, mod)
        for x in range(size)
    )
    hist = Counter(fibers.values())
    hist[0] = size - len(fibers)
    return {t: cnt for t, cnt in hist.items() if cnt}
