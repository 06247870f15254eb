"""Euler-Rayleigh power sums of zeros and the radius bounds they imply.

Matching the first Maclaurin coefficients of an entire function of genus zero
against its Weierstrass product gives the power sums of its reciprocal zeros as
rational functions of nu and n.  With a_k = sum 1/zeta^k over the zeros zeta (in the
natural variable of the function), the Euler-Rayleigh inequalities
``a_k^(-1/k) < zeta_1 < a_k / a_(k+1)`` then sandwich the first zero, which for
beta = 0 is exactly the radius of starlikeness or convexity.

Sum families and the zeros they run over:

=========  ==========================  ==========
family     zeros of                    power of t
=========  ==========================  ==========
j2, j4     J_nu^(n)                    2, 4
sigma1/2   g'           (squared, z)   2, 4
rho1/2     h'           (in x)         2, 4
kappa1/2   (z g')'      (squared, z)   2, 4
omega1/2   (z h')'      (in x)         2, 4
=========  ==========================  ==========

Here t is the Bessel argument, so every sum is ``sum t_m^(-power)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .series import Params
from .zeros import find_zeros


def _check(p: Params) -> None:
    if not p.nu > p.n - 1:
        raise DomainError(f"need nu > n - 1, got nu={p.nu}, n={p.n}")


def _blocks(p: Params):
    """(nu + 2, (nu-n+2)(nu-n+1), (nu+4)(nu+3), (nu-n+4)(nu-n+3))."""
    s = p.nu - p.n
    return p.nu + 2, (s + 2) * (s + 1), (p.nu + 4) * (p.nu + 3), (s + 4) * (s + 3)


class SumValue(NamedTuple):
    family: str
    params: Params
    value: float


@dataclass(frozen=True)
class BoundsPair:
    target: str
    params: Params
    lower: float
    upper: float
    extra_upper: float | None = None

    def contains(self, value: float) -> bool:
        return self.lower < value < self.upper


# ---------------------------------------------------------------- closed forms

def _j2(p):
    v2, ab, _, _ = _blocks(p)
    return v2 / (4 * ab)


def _j4(p):
    v2, ab, v43, cd = _blocks(p)
    return (v2 ** 2 / ab - v43 / cd) / (16 * ab)


def _sigma(p):
    v2, ab, v43, cd = _blocks(p)
    first = 3 * v2 / (4 * ab)
    return first, 3 * v2 / (16 * ab) * (3 * v2 / ab - 5 * v43 / (3 * cd * v2))


def _rho(p):
    v2, ab, v43, cd = _blocks(p)
    first = v2 / (2 * ab)
    return first, v2 / (4 * ab) * (v2 / ab - 3 * v43 / (4 * cd * v2))


def _kappa(p):
    v2, ab, v43, cd = _blocks(p)
    first = 9 * v2 / (4 * ab)
    return first, 9 * v2 / (16 * ab) * (9 * v2 / ab - 25 * v43 / (9 * cd * v2))


def _omega(p):
    v2, ab, v43, cd = _blocks(p)
    first = v2 / ab
    return first, v2 / ab * (v2 / ab - 9 * v43 / (16 * cd * v2))


_AUX = {"sigma": _sigma, "rho": _rho, "kappa": _kappa, "omega": _omega}

# Zero family (see zeros.FAMILIES) behind each sum family.
ZERO_FAMILY = {"j": "J-deriv", "sigma": "g-prime", "rho": "h-prime",
               "kappa": "Delta", "omega": "Theta"}


def zero_power_sum(p: Params, power: int) -> SumValue:
    """Closed form of sum over m of (j_m)^(-power), j_m the zeros of J_nu^(n)."""
    _check(p)
    if power == 2:
        return SumValue("j2", p, _j2(p))
    if power == 4:
        return SumValue("j4", p, _j4(p))
    raise ValueError("power must be 2 or 4")


def auxiliary_sums(family: str, p: Params) -> tuple[SumValue, SumValue]:
    """First and second reciprocal power sums for the zeros behind ``family``."""
    _check(p)
    try:
        first, second = _AUX[family](p)
    except KeyError:
        raise ValueError(f"unknown sum family {family!r}; expected one of {sorted(_AUX)}") from None
    return SumValue(family + "1", p, first), SumValue(family + "2", p, second)


def reduced_zero_power_sum(nu: float, n: int, power: int) -> float:
    """Hand-reduced forms of the power sums for n = 0, 1, 2.

    Each agrees identically with :func:`zero_power_sum`; they are kept as an
    independent check of the general formula.
    """
    if (n, power) == (0, 2):
        return 1 / (4 * (nu + 1))
    if (n, power) == (0, 4):
        return 1 / (16 * (nu + 2) * (nu + 1) ** 2)
    if (n, power) == (1, 2):
        return (nu + 2) / (4 * nu * (nu + 1))
    if (n, power) == (1, 4):
        return (nu ** 2 + 8 * nu + 8) / (16 * nu ** 2 * (nu + 1) ** 2 * (nu + 2))
    if (n, power) == (2, 2):
        return (nu + 2) / (4 * (nu - 1) * nu)
    if (n, power) == (2, 4):
        return (nu ** 3 + 13 * nu ** 2 + 32 * nu + 8) / (16 * (nu - 1) ** 2 * nu ** 2 * (nu + 1) * (nu + 2))
    raise ValueError("reduced forms exist for n in {0, 1, 2} and power in {2, 4}")


# ---------------------------------------------------------------- bounds

TARGETS = ("starlike-g", "starlike-h", "convex-g", "convex-h")


def radius_bounds(target: str, p: Params) -> BoundsPair:
    """k = 1 Euler-Rayleigh bounds for the beta = 0 radius named by ``target``.

    h radii are in the variable of h.  Starlike targets also carry the cruder
    upper bound from the first power sum alone (``extra_upper``); it is reported
    as is and may be weaker or stronger than ``upper``.
    """
    _check(p)
    v2, ab, v43, cd = _blocks(p)
    if target == "starlike-g":
        lower = 2 * math.sqrt(ab / (3 * v2))
        upper = 2 / math.sqrt(3 * v2 / ab - 5 * v43 / (3 * cd * v2))
        extra = math.sqrt(2 * ab / v2)
    elif target == "starlike-h":
        lower = 2 * ab / v2
        upper = 2 / (v2 / ab - 3 * v43 / (4 * cd * v2))
        extra = 4 * ab / v2
    elif target == "convex-g":
        lower = (2 / 3) * math.sqrt(ab / v2)
        upper = 2 / math.sqrt(9 * v2 / ab - 25 * v43 / (9 * cd * v2))
        extra = None
    elif target == "convex-h":
        lower = ab / v2
        upper = 1 / (v2 / ab - 9 * v43 / (16 * cd * v2))
        extra = None
    else:
        raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")
    return BoundsPair(target, p, lower, upper, extra)


def convex_bounds_small_n(kind: str, nu: float, n: int) -> tuple[float, float]:
    """Convexity bounds written out for n = 1, 2, 3 (g in z, h in x)."""
    lo_fac = {1: nu * (nu + 1), 2: nu * (nu - 1), 3: (nu - 2) * (nu - 1)}[n]
    tail_fac = {1: (nu + 3) * (nu + 2) ** 2, 2: (nu + 1) * (nu + 2) ** 2, 3: nu * (nu + 1) * (nu + 2)}[n]
    v43 = (nu + 4) * (nu + 3)
    if kind == "g":
        lower = (2 / 3) * math.sqrt(lo_fac / (nu + 2))
        upper = 2 * math.sqrt(1 / (9 * (nu + 2) / lo_fac - 25 * v43 / (9 * tail_fac)))
    elif kind == "h":
        lower = lo_fac / (nu + 2)
        upper = 1 / ((nu + 2) / lo_fac - 9 * v43 / (16 * tail_fac))
    else:
        raise ValueError("kind must be 'g' or 'h'")
    return lower, upper


# ---------------------------------------------------------------- numeric check

def power_sum_tail(last_zero: float, power: int) -> float:
    """Estimate of sum_{k>=1} (t_M + k pi)^(-power) for zeros spaced pi apart.

    Integrating from the midpoint t_M + pi/2 (rather than from t_M) makes the
    estimate exact to second order in the spacing.
    """
    start = last_zero + math.pi / 2
    return 1.0 / (math.pi * (power - 1) * start ** (power - 1))


def numeric_power_sum(which: str, p: Params, power: int, count: int = 200,
                      tail: bool = True) -> float:
    """Sum of t_m^(-power) over the first ``count`` zeros of ``which`` plus a tail."""
    t = find_zeros(which, p, count).in_bessel_argument()
    total = math.fsum(np.power(t, -float(power)))
    if tail:
        total += power_sum_tail(float(t[-1]), power)
    return total


def numeric_sums(family: str, p: Params, count: int = 200) -> tuple[float, float]:
    """Numeric counterparts of (first, second) sums of a family: powers 2 and 4 in t."""
    which = ZERO_FAMILY["j" if family in ("j2", "j4", "j") else family]
    return numeric_power_sum(which, p, 2, count), numeric_power_sum(which, p, 4, count)
