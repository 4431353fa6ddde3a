"""The Budaghyan-Carlet hexanomial family and its derivative structure.

Over F_{2^(2m)} with r = 2^m and s = 2^n, the map under study is

    F(x) = x * (x^s + x^r + c x^(rs)) + x^s * (c^r x^r + d x^(rs)) + x^((s+1) r)

with a free coefficient c and a coefficient d outside the subfield
F_{2^m}.  Every power that appears is x^(2^t) for some t, so evaluation
composes Frobenius maps and never exponentiates big integers.

For a nonzero shift a, the rescaled derivative

    D_a(x) = F(a x) + F(a x + a) + F(a)

collapses (the degree-(s+1)r terms cancel) to a sum of six terms of the
form coeff * (x^(2^i) + x^(2^j)).  Each such difference is linear over
F_{2^k}, k = gcd(m, n), so D_a is a F_{2^k}-linear map whose nonzero
fibers are cosets of its kernel -- the fact that makes exhaustive
derivative verification cheap.  The six coefficients depend only on
(params, a) and are cached.

F is represented operationally, as evaluation procedures, not as a
coefficient list.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd

from .field import Field, make_field


@dataclass(frozen=True)
class BCParams:
    """One hexanomial instance: exponent pair (m, n), field F_{2^(2m)}, coefficients c, d.

    d must lie outside F_{2^m}; c is unrestricted (compatibility of c is a
    separate question, decided in :mod:`apnforge.compatibility`).
    """

    m: int
    n: int
    field: Field
    c: int
    d: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m, n must be positive, got ({self.m}, {self.n})")
        if self.field.w != 2 * self.m:
            raise ValueError(
                f"field degree {self.field.w} does not match 2m = {2 * self.m}"
            )
        self.field.check(self.c)
        self.field.check(self.d)
        if self.field.in_subfield(self.d, self.m):
            raise ValueError(
                f"d={self.d:#x} lies in the subfield F_2^{self.m}; the"
                " derivative conjugate-difference argument needs d + d^r != 0"
            )

    @property
    def k(self) -> int:
        return gcd(self.m, self.n)

    @property
    def u(self) -> int:
        """2^gcd(m, n): the expected fiber size of every nonzero derivative."""
        return 1 << self.k

    @property
    def r(self) -> int:
        return 1 << self.m

    @property
    def s(self) -> int:
        return 1 << self.n

    def to_dict(self) -> dict:
        f = self.field
        return {
            "m": self.m,
            "n": self.n,
            "c_hex": f.element_hex(self.c),
            "d_hex": f.element_hex(self.d),
            "modulus_hex": f.modulus_hex,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "BCParams":
        m = int(obj["m"])
        field = make_field(2 * m, int(obj["modulus_hex"], 16))
        return cls(
            m=m,
            n=int(obj["n"]),
            field=field,
            c=field.element_from_hex(obj["c_hex"]),
            d=field.element_from_hex(obj["d_hex"]),
        )


def eval_hexanomial(p: BCParams, x: int) -> int:
    """F(x): six terms, three Frobenius iterates of x."""
    f = p.field
    xr = f.frobenius(x, p.m)
    xs = f.frobenius(x, p.n)
    xrs = f.frobenius(x, p.m + p.n)
    cr = f.frobenius(p.c, p.m)
    return (
        f.mul(x, xs ^ xr ^ f.mul(p.c, xrs))
        ^ f.mul(xs, f.mul(cr, xr) ^ f.mul(p.d, xrs))
        ^ f.mul(xrs, xr)
    )


def eval_derivative(p: BCParams, a: int, x: int) -> int:
    """D_a(x) = F(ax) + F(ax + a) + F(a) straight from the definition."""
    if a == 0:
        raise ValueError("derivative shift a must be nonzero")
    f = p.field
    ax = f.mul(a, x)
    return eval_hexanomial(p, ax) ^ eval_hexanomial(p, ax ^ a) ^ eval_hexanomial(p, a)


@functools.lru_cache(maxsize=1 << 18)
def derivative_coeffs(p: BCParams, a: int) -> tuple[int, int, int, int, int, int]:
    """The six coefficients of the collapsed form of D_a.

    Pairing order matches :func:`eval_derivative_linear`:
    (x + x^s), (x + x^r), (x + x^(rs)), (x^r + x^s), (x^s + x^(rs)),
    (x^(rs) + x^r).
    """
    if a == 0:
        raise ValueError("derivative shift a must be nonzero")
    f = p.field
    ar = f.frobenius(a, p.m)
    an = f.frobenius(a, p.n)
    ars = f.frobenius(a, p.m + p.n)
    cr = f.frobenius(p.c, p.m)
    return (
        f.mul(an, a),
        f.mul(ar, a),
        f.mul(p.c, f.mul(ars, a)),
        f.mul(cr, f.mul(ar, an)),
        f.mul(p.d, f.mul(an, ars)),
        f.mul(ars, ar),
    )


def eval_derivative_linear(p: BCParams, a: int, x: int) -> int:
    """D_a(x) through the collapsed six-term linear form.

    Independent of :func:`eval_derivative` past the shared field ops; the
    two must agree everywhere, and the test suite holds them to that.
    """
    a1, a2, a3, a4, a5, a6 = derivative_coeffs(p, a)
    f = p.field
    xr = f.frobenius(x, p.m)
    xs = f.frobenius(x, p.n)
    xrs = f.frobenius(x, p.m + p.n)
    return (
        f.mul(a1, x ^ xs)
        ^ f.mul(a2, x ^ xr)
        ^ f.mul(a3, x ^ xrs)
        ^ f.mul(a4, xr ^ xs)
        ^ f.mul(a5, xs ^ xrs)
        ^ f.mul(a6, xrs ^ xr)
    )


def derivative_kernel(p: BCParams, a: int) -> set[int]:
    """Exhaustive kernel of D_a; always contains F_{2^k} as a subset."""
    return {x for x in p.field.elements() if eval_derivative_linear(p, a, x) == 0}


def default_d(field: Field, m: int) -> int:
    """Least element outside F_{2^m}: the canonical d for reproducible runs."""
    if field.w != 2 * m:
        raise ValueError(f"field degree {field.w} does not match 2m = {2 * m}")
    for x in field.elements():
        if not field.in_subfield(x, m):
            return x
    raise AssertionError("F_2^(2m) strictly contains F_2^m")
