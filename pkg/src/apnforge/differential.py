"""Differential-spectrum verification for hexanomial instances.

For every nonzero shift a this module counts the fiber sizes of
x -> F(x) + F(x + a) two independent ways:

* the histogram route: tabulate F once, histogram the 2^w difference
  values per shift (numpy bincount);
* the kernel route: compute |ker D_a| from the collapsed six-term linear
  form and predict the whole histogram from the coset structure.

The routes share nothing past basic field ops, so a bug in either
exhaustive loop surfaces as a :class:`CrossCheckError` rather than a
silently wrong verdict.  A map is 2^k-to-one exactly when every attained
fiber has size 2^k; APN is the k = gcd(m, n) = 1 case.

Spectrum work is O(2^(2w)) and capped (default w <= 16); the full
difference distribution table is O(4^w) memory and capped tighter
(default w <= 12).  Both caps are arguments, not constants.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .field import Field, SizeLimitError
from .hexanomial import BCParams, derivative_coeffs, eval_hexanomial

SPECTRUM_DEGREE_CAP = 16
DDT_DEGREE_CAP = 12


class CrossCheckError(RuntimeError):
    """Histogram route and kernel route disagree: an internal bug, not a verdict."""


@dataclass(frozen=True)
class DerivativeSpectrum:
    """Fiber-size histograms per shift: histograms[a][t] = #{b : |fiber over b| = t}."""

    histograms: Mapping[int, Mapping[int, int]]
    max_count: int

    def fiber_sizes(self, a: int) -> set[int]:
        """Attained (nonzero) fiber sizes for shift a."""
        return {t for t in self.histograms[a] if t}

    def collapsed_summary(self) -> list[dict]:
        """Histogram shapes grouped over a: few lines even for big sweeps."""
        groups = Counter(
            tuple(sorted(self.histograms[a].items())) for a in sorted(self.histograms)
        )
        return [
            {"histogram": {str(t): cnt for t, cnt in shape}, "count_a": mult}
            for shape, mult in sorted(groups.items())
        ]


def value_table(p: BCParams) -> list[int]:
    """F at every element, canonical order (scalar route, on purpose)."""
    return [eval_hexanomial(p, x) for x in p.field.elements()]


@functools.lru_cache(maxsize=8)
def _ftab(p: BCParams) -> np.ndarray:
    """value_table as a read-only array, cached so per-shift loops stay O(2^w)."""
    tab = np.array(value_table(p), dtype=np.int64)
    tab.setflags(write=False)
    return tab


def derivative_spectrum(p: BCParams, degree_cap: int = SPECTRUM_DEGREE_CAP) -> DerivativeSpectrum:
    """Exhaustive fiber histograms of x -> F(x) + F(x+a) for every a != 0."""
    w = p.field.w
    if w > degree_cap:
        raise SizeLimitError(f"spectrum for w={w} exceeds cap {degree_cap}")
    size = p.field.size
    ftab = _ftab(p)
    xs = np.arange(size)
    hists: dict[int, dict[int, int]] = {}
    max_count = 0
    for a in range(1, size):
        fibers = np.bincount(ftab ^ ftab[xs ^ a], minlength=size)
        shape = np.bincount(fibers)
        hists[a] = {int(t): int(cnt) for t, cnt in enumerate(shape) if cnt}
        max_count = max(max_count, len(shape) - 1)
    return DerivativeSpectrum(histograms=hists, max_count=max_count)


def _frob_array(field: Field, t: int) -> np.ndarray:
    """x^(2^t) for every x, as an array."""
    exp, log = field.np_tables()
    out = exp[(log[np.arange(field.size)] << (t % field.w)) % field.order]
    out[0] = 0
    return out


def _mul_const(field: Field, c: int, arr: np.ndarray) -> np.ndarray:
    """c * arr elementwise; exp is doubled so no reduction is needed."""
    if c == 0:
        return np.zeros_like(arr)
    exp, log = field.np_tables()
    return np.where(arr == 0, 0, exp[log[c] + log[arr]])


@functools.lru_cache(maxsize=64)
def _linear_parts(p: BCParams) -> tuple[np.ndarray, ...]:
    """The six difference tables x^(2^i) + x^(2^j), ordered as derivative_coeffs."""
    xs = np.arange(p.field.size)
    fr = _frob_array(p.field, p.m)
    fs = _frob_array(p.field, p.n)
    frs = _frob_array(p.field, p.m + p.n)
    return (xs ^ fs, xs ^ fr, xs ^ frs, fr ^ fs, fs ^ frs, frs ^ fr)


def derivative_table_linear(p: BCParams, a: int) -> np.ndarray:
    """D_a at every x through the collapsed linear form (vectorized)."""
    acc = np.zeros(p.field.size, dtype=np.int64)
    for cf, diff in zip(derivative_coeffs(p, a), _linear_parts(p)):
        acc ^= _mul_const(p.field, cf, diff)
    return acc


def derivative_table(p: BCParams, a: int) -> np.ndarray:
    """D_a at every x through the defining form F(ax) + F(ax+a) + F(a)."""
    if a == 0:
        raise ValueError("derivative shift a must be nonzero")
    ftab = _ftab(p)
    ax = _mul_const(p.field, a, np.arange(p.field.size))
    return ftab[ax] ^ ftab[ax ^ a] ^ ftab[a]


def kernel_sizes(p: BCParams) -> np.ndarray:
    """|ker D_a| for every a (index 0 unused); the kernel route."""
    size = p.field.size
    out = np.zeros(size, dtype=np.int64)
    for a in range(1, size):
        out[a] = int(np.count_nonzero(derivative_table_linear(p, a) == 0))
    return out


def _coset_histogram(size: int, kernel: int) -> dict[int, int]:
    """The fiber histogram an F_u-linear map with the given kernel size must have."""
    attained = size // kernel
    hist = {kernel: attained}
    if attained < size:
        hist[0] = size - attained
    return hist


def cross_check_spectrum(p: BCParams, spec: DerivativeSpectrum) -> None:
    """Raise CrossCheckError unless histogram and kernel routes agree exactly."""
    size = p.field.size
    ks = kernel_sizes(p)
    for a, hist in spec.histograms.items():
        predicted = _coset_histogram(size, int(ks[a]))
        if dict(hist) != predicted:
            raise CrossCheckError(
                f"shift a={a:#x}: histogram route {dict(hist)} vs kernel route {predicted}"
            )


def is_t_to_one(
    p: BCParams,
    t: int,
    degree_cap: int = SPECTRUM_DEGREE_CAP,
    cross_check: bool = True,
) -> bool:
    """Every nonzero-shift fiber has size exactly t (t a power of two)."""
    if t < 1 or t & (t - 1):
        raise ValueError(f"fiber size must be a power of two, got {t}")
    spec = derivative_spectrum(p, degree_cap)
    if cross_check:
        cross_check_spectrum(p, spec)
    return all(spec.fiber_sizes(a) == {t} for a in spec.histograms)


def is_apn(p: BCParams, degree_cap: int = SPECTRUM_DEGREE_CAP, cross_check: bool = True) -> bool:
    """Almost perfect nonlinear: every derivative is 2-to-one."""
    return is_t_to_one(p, 2, degree_cap, cross_check)


def ddt(p: BCParams, degree_cap: int = DDT_DEGREE_CAP) -> np.ndarray:
    """Full difference distribution table; row a=0 is the conventional [2^w, 0, ...]."""
    w = p.field.w
    if w > degree_cap:
        raise SizeLimitError(f"ddt for w={w} exceeds cap {degree_cap}")
    size = p.field.size
    ftab = _ftab(p)
    xs = np.arange(size)
    table = np.zeros((size, size), dtype=np.int64)
    table[0, 0] = size
    for a in range(1, size):
        table[a] = np.bincount(ftab ^ ftab[xs ^ a], minlength=size)
    return table


def ddt_to_csv(table: np.ndarray) -> str:
    """Rows a ascending, columns b ascending, plain integers."""
    return "\n".join(",".join(str(int(v)) for v in row) for row in table) + "\n"


def spectrum_report(p: BCParams, spec: DerivativeSpectrum) -> dict:
    """Deterministic JSON-ready summary of one verification run."""
    uniform = all(spec.fiber_sizes(a) == {p.u} for a in spec.histograms)
    apn = all(spec.fiber_sizes(a) == {2} for a in spec.histograms)
    return {
        "schema": 1,
        "kind": "derivative-spectrum",
        "params": p.to_dict(),
        "per_a_histogram_summary": spec.collapsed_summary(),
        "max_count": spec.max_count,
        "verdicts": {"is_apn": apn, "is_2k_to_one": uniform, "k": p.k},
    }
