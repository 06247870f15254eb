"""Positive zeros of J_nu^(n) and of the derived functions g', h', (zg')' and (zh')'.

Each function is, up to a positive factor, a weighted sum ``sum_m w(m) c_m t^(2m)`` in
the Bessel argument t (see :mod:`bessel_radii.series`).  Zeros are bracketed by a sign
scan of step pi/8 and refined by bisection followed by two Newton steps.

The h-related zeros (of h' and of (zh')') are reported in the variable of h, i.e.
as squares of the Bessel argument.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, LengthMismatch, ScanExhausted
from .series import (NEXT, NEXT_SQ, ODD, ODD_SQ, ONE, SERIES_SWITCH, EulerWeight,
                     Params, family, weighted_bessel)

SCAN_START = 1e-3
SCAN_STEP = math.pi / 8

# which -> (weight in k = 2m, variable the zeros are reported in)
FAMILIES: dict[str, tuple[EulerWeight, str]] = {
    "J-deriv": (ONE, "z"),
    "g-prime": (ODD, "z"),
    "h-prime": (NEXT, "x"),
    "Delta": (ODD_SQ, "z"),
    "Theta": (NEXT_SQ, "x"),
}


@dataclass(frozen=True)
class ZeroSequence:
    which: str
    params: Params
    zeros: tuple[float, ...]
    brackets: tuple[tuple[float, float], ...]
    refine_tol: float = 1e-12
    variable: str = "z"

    def __len__(self):
        return len(self.zeros)

    def __getitem__(self, i):
        return self.zeros[i]

    def __iter__(self):
        return iter(self.zeros)

    @property
    def first(self) -> float:
        return self.zeros[0]

    def in_bessel_argument(self) -> np.ndarray:
        """The zeros as values of the Bessel argument t (square roots for h-type)."""
        z = np.asarray(self.zeros)
        return np.sqrt(z) if self.variable == "x" else z


def _weight(which: str) -> tuple[EulerWeight, str]:
    try:
        return FAMILIES[which]
    except KeyError:
        raise ValueError(f"unknown zero family {which!r}; expected one of {sorted(FAMILIES)}") from None


def kernel(which: str, p: Params, t, slope: bool = False):
    """Value (or t-derivative) of the function behind ``which`` at Bessel argument t.

    Small arguments use the power series, larger ones the Bessel-function route;
    both return the same normalized quantity.
    """
    weight, _ = _weight(which)
    if slope:
        weight = weight.times_k()
    t = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty_like(t)
    small = t <= SERIES_SWITCH
    if small.any():
        spec = family(p.nu, p.n, weight)
        out[small] = [spec(v) for v in t[small]]
    if (~small).any():
        out[~small] = weighted_bessel(p.nu, p.n, weight, t[~small])
    if slope:
        out = out / t
    return out


def _scan(which: str, p: Params, count: int):
    """Brackets of the first ``count`` sign changes on the grid SCAN_START + k*SCAN_STEP."""
    cap = math.pi * (count + abs(p.nu) + p.n + 20) * 2
    brackets = []
    start = SCAN_START
    prev_t, prev_v = None, None
    chunk = max(64, 8 * count)
    while len(brackets) < count:
        if start > cap:
            raise ScanExhausted(f"found {len(brackets)} of {count} zeros of {which} below t={cap:.1f}")
        grid = start + SCAN_STEP * np.arange(chunk)
        vals = kernel(which, p, grid)
        if prev_t is not None:
            grid = np.concatenate(([prev_t], grid))
            vals = np.concatenate(([prev_v], vals))
        change = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) <= 0)[0]
        for i in change:
            if vals[i] == 0 and brackets and brackets[-1][1] == grid[i]:
                continue  # zero landed on a shared grid point, already bracketed
            brackets.append((grid[i], grid[i + 1]))
            if len(brackets) == count:
                break
        prev_t, prev_v = grid[-1], vals[-1]
        start = grid[-1] + SCAN_STEP
    return np.array(brackets[:count])


def _refine(which: str, p: Params, lo: np.ndarray, hi: np.ndarray, tol: float):
    """Vectorized bisection to ``tol`` then two guarded Newton steps."""
    flo = kernel(which, p, lo)
    for _ in range(200):
        if np.all(hi - lo <= tol):
            break
        mid = 0.5 * (lo + hi)
        fm = kernel(which, p, mid)
        left = np.sign(fm) == np.sign(flo)
        lo = np.where(left, mid, lo)
        flo = np.where(left, fm, flo)
        hi = np.where(left, hi, mid)
        hit = fm == 0
        lo = np.where(hit, mid, lo)
        hi = np.where(hit, mid, hi)
    t = 0.5 * (lo + hi)
    for _ in range(2):
        f = kernel(which, p, t)
        df = kernel(which, p, t, slope=True)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(df != 0, f / df, 0.0)
        cand = t - step
        ok = (cand >= lo) & (cand <= hi) & np.isfinite(cand)
        t = np.where(ok, cand, t)
    return t, lo, hi


def find_zeros(which: str, p: Params, count: int, refine_tol: float = 1e-12) -> ZeroSequence:
    """First ``count`` positive zeros of the function named by ``which``.

    ``which`` is one of ``"J-deriv"`` (J_nu^(n)), ``"g-prime"``, ``"h-prime"``,
    ``"Delta"`` ((z g')') or ``"Theta"`` ((z h')').
    """
    _, variable = _weight(which)
    if not isinstance(p, Params):
        raise TypeError("p must be a Params instance")
    if count < 1:
        raise DomainError("count must be at least 1")
    br = _scan(which, p, count)
    t, lo, hi = _refine(which, p, br[:, 0].copy(), br[:, 1].copy(), refine_tol)
    if np.any(np.diff(t) <= 10 * refine_tol):
        raise ScanExhausted(f"zeros of {which} closer than {10 * refine_tol:g}; not simple")
    if variable == "x":
        t, lo, hi = t * t, lo * lo, hi * hi
    return ZeroSequence(which, p, tuple(float(v) for v in t),
                        tuple((float(a), float(b)) for a, b in zip(lo, hi)),
                        refine_tol, variable)


def first_zero(which: str, p: Params) -> float:
    return find_zeros(which, p, 1).first


class InterlacingReport(NamedTuple):
    interlaced: bool
    index: int | None  # 1-based position of the first failed comparison
    detail: str

    def __bool__(self):
        return self.interlaced


def check_interlacing(a: ZeroSequence, b: ZeroSequence) -> InterlacingReport:
    """Check that the zeros of ``a`` and ``b`` alternate strictly.

    The sequence starting lower is taken to lead, and the pattern
    lead_1 < other_1 < lead_2 < other_2 < ... is enforced over the common prefix.
    """
    if len(a) < 2 or len(b) < 2:
        raise LengthMismatch("interlacing needs at least two zeros in each sequence")
    if a.params.nu != b.params.nu:
        raise DomainError("interlacing compares sequences of the same order nu")
    k = min(len(a), len(b))
    lead, other = (b, a) if b[0] < a[0] else (a, b)
    merged = []
    for i in range(k):
        merged += [lead[i], other[i]]
    for i in range(len(merged) - 1):
        if not merged[i] < merged[i + 1]:
            pos = i // 2 + 1
            return InterlacingReport(False, pos, f"comparison {i + 1} fails at zero #{pos}: "
                                                 f"{merged[i]!r} !< {merged[i + 1]!r}")
    return InterlacingReport(True, None, f"{k} zeros of each interlace")
