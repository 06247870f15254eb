"""Radii of starlikeness and convexity of order beta for f, g and h.

Every radius is the smallest positive root of ``Q(r) - beta`` where Q is one of the
quotients in :mod:`bessel_radii.series`.  On the bracket used here Q decreases
strictly from 1 towards -infinity, so a sign change is guaranteed and bisection is
certified; two Newton steps then polish the root.

Radii of h are reported in the variable of h (the square of the Bessel argument).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BracketFailure, DomainError
from .series import (DEFAULT_TRUNCATION, Params, TruncationPolicy, convex_quotient,
                     modified_quotient, star_quotient)
from .zeros import first_zero

KINDS = ("f", "g", "h")
# Bracket ends stay this far (relatively) inside a pole of the quotient.
POLE_MARGIN = 1e-9
BISECT_RTOL = 1e-12


@dataclass(frozen=True)
class RadiusResult:
    kind: str
    property: str  # "starlike" | "convex"
    params: Params
    radius: float
    bracket: tuple[float, float]
    residual: float
    branch: str = "principal"  # "principal" | "modified"

    @property
    def variable(self) -> str:
        return "x" if self.kind == "h" else "z"

    def in_bessel_argument(self) -> float:
        """The radius as a Bessel argument; square root of the h-variable value for h."""
        return math.sqrt(self.radius) if self.kind == "h" else self.radius


def _solve(equation, lo, hi):
    """Bisection on a decreasing ``equation`` with a sign change on [lo, hi].

    ``equation(r, slope)`` returns the value, or (value, derivative) when ``slope``.
    Returns (root, (lo, hi)).
    """
    flo, fhi = equation(lo, False), equation(hi, False)
    if not (flo > 0 > fhi):
        raise BracketFailure(f"no sign change on [{lo!r}, {hi!r}]: values {flo:.3g}, {fhi:.3g}")
    for _ in range(300):
        if hi - lo <= BISECT_RTOL * hi:
            break
        mid = 0.5 * (lo + hi)
        fm = equation(mid, False)
        if fm > 0:
            lo = mid
        elif fm < 0:
            hi = mid
        else:
            return mid, (lo, hi)
    r = 0.5 * (lo + hi)
    for _ in range(2):
        f, df = equation(r, True)
        if df == 0 or f == 0:
            break
        cand = r - f / df
        if not lo < cand < hi:
            break
        r = cand
    return r, (lo, hi)


def _result(kind, prop, p, equation, lo, hi, branch="principal"):
    r, bracket = _solve(equation, lo, hi)
    return RadiusResult(kind, prop, p, r, bracket, equation(r, False), branch)


def _inner_bracket(upper: float) -> tuple[float, float]:
    return upper * 1e-6, upper * (1 - POLE_MARGIN)


def starlike_radius(kind: str, p: Params,
                    truncation: TruncationPolicy = DEFAULT_TRUNCATION) -> RadiusResult:
    """Radius of starlikeness of order ``p.beta``.

    For f with n-1 < nu < n the extremal point lies on the imaginary axis and the
    root of the (increasing) modified quotient is returned instead.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown normalization {kind!r}")
    beta = p.beta
    if kind == "f" and p.nu == p.n:
        raise DomainError("f is undefined for nu = n")

    if kind == "f" and p.nu < p.n:
        def eq(r, slope):
            out = modified_quotient(p, r, truncation, slope)
            if slope:
                return out[0] / p.shift - beta, out[1] / p.shift
            return out / p.shift - beta

        hi = 1.0
        while eq(hi, False) > 0:
            hi *= 2
            if hi > 1e3:
                raise BracketFailure("modified quotient never reached the target level")
        return _result(kind, "starlike", p, eq, hi * 1e-6, hi, "modified")

    j1 = first_zero("J-deriv", p)
    upper = j1 * j1 if kind == "h" else j1

    def eq(r, slope):
        out = star_quotient(kind, p, r, truncation, slope)
        return (out[0] - beta, out[1]) if slope else out - beta

    return _result(kind, "starlike", p, eq, *_inner_bracket(upper))


def convex_radius(kind: str, p: Params,
                  truncation: TruncationPolicy = DEFAULT_TRUNCATION) -> RadiusResult:
    """Radius of convexity of order ``p.beta``.

    Brackets: f on (0, first zero of J^(n+1)), g on (0, first zero of g'),
    h on (0, first zero of h').
    """
    if kind == "f":
        p.require_above_n("the convexity radius of f")
        upper = first_zero("J-deriv", Params(p.nu, p.n + 1))
    elif kind == "g":
        upper = first_zero("g-prime", p)
    elif kind == "h":
        upper = first_zero("h-prime", p)
    else:
        raise ValueError(f"unknown normalization {kind!r}")
    beta = p.beta

    def eq(r, slope):
        out = convex_quotient(kind, p, r, truncation, slope)
        return (out[0] - beta, out[1]) if slope else out - beta

    return _result(kind, "convex", p, eq, *_inner_bracket(upper))


def radius(kind: str, prop: str, p: Params, **kw) -> RadiusResult:
    if prop == "starlike":
        return starlike_radius(kind, p, **kw)
    if prop == "convex":
        return convex_radius(kind, p, **kw)
    raise ValueError(f"unknown property {prop!r}")
