"""Power-series evaluation for derivatives of Bessel functions and their normalizations.

Every function in this module works on the positive real axis.  The central object
is the normalized coefficient

    c_m = (-1)^m Gamma(2m+nu+1) Gamma(nu-n+1) / (m! 4^m Gamma(2m-n+nu+1) Gamma(m+nu+1)),

which is the Maclaurin coefficient of z^(2m+1) in g_{nu,n}.  All quotients used by the
radius equations are ratios of weighted sums ``sum_m w(m) c_m t^(2m)`` (or ``x^m`` in the
variable of h), so nothing here needs the zeros of J_nu^(n).

Coefficients are handled in log space because Gamma(2m+nu+1) overflows a double
near m = 85; the terms are then summed with :func:`math.fsum`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np
from scipy import special

from .errors import DomainError, NonConvergence, PoleProximity

LOG2 = math.log(2.0)
LOG4 = math.log(4.0)

# Past this argument the alternating series loses more than ~1e-13 of its
# envelope to cancellation; the Bessel route takes over.
SERIES_SWITCH = 6.0


@dataclass(frozen=True)
class Params:
    """Order ``nu``, derivative order ``n`` and target order ``beta``."""

    nu: float
    n: int = 0
    beta: float = 0.0

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 0:
            raise DomainError(f"derivative order must be a non-negative integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "nu", float(self.nu))
        object.__setattr__(self, "beta", float(self.beta))
        # tested as nu - n + 1 > 0 so that rounding cannot hand Gamma a zero
        if not math.isfinite(self.nu) or not self.nu - self.n + 1 > 0:
            raise DomainError(f"need nu > n - 1, got nu={self.nu}, n={self.n}")
        if not 0.0 <= self.beta < 1.0:
            raise DomainError(f"beta must lie in [0, 1), got {self.beta}")

    @property
    def shift(self) -> float:
        """nu - n, the exponent carried by J_nu^(n) at the origin."""
        return self.nu - self.n

    def require_above_n(self, what: str = "this quantity"):
        if not self.nu > self.n:
            raise DomainError(f"{what} needs nu > n, got nu={self.nu}, n={self.n}")


@dataclass(frozen=True)
class TruncationPolicy:
    rel_tol: float = 1e-15
    abs_tol: float = 1e-300
    max_terms: int = 500
    consecutive_small: int = 3


DEFAULT_TRUNCATION = TruncationPolicy()


class SeriesSum(NamedTuple):
    value: float
    n_terms: int
    abs_sum: float  # sum of |term|, the cancellation scale

    @property
    def condition(self) -> float:
        if self.value == 0.0:
            return math.inf
        return self.abs_sum / abs(self.value)


@dataclass(frozen=True)
class SeriesSpec:
    """A power series ``sum_m a_m z^(e(m))`` with ``a_m`` given in log/sign form.

    ``parity`` fixes the exponent: ``"even"`` is 2m, ``"odd"`` is 2m+1 and
    ``"general"`` is m.
    """

    log_abs: Callable[[int], float]
    sign: Callable[[int], int]
    parity: str = "even"
    truncation: TruncationPolicy = field(default=DEFAULT_TRUNCATION)

    def coefficient(self, m: int) -> float:
        la = self.log_abs(m)
        if la == -math.inf:
            return 0.0
        return self.sign(m) * math.exp(la)

    def exponent(self, m: int) -> int:
        return {"even": 2 * m, "odd": 2 * m + 1, "general": m}[self.parity]

    def evaluate(self, z: float) -> SeriesSum:
        return evaluate(self, z)

    def __call__(self, z: float) -> float:
        return evaluate(self, z).value


def evaluate(spec: SeriesSpec, z: float) -> SeriesSum:
    """Sum ``spec`` at ``z`` until the tail is negligible.

    Stops once ``consecutive_small`` successive terms past the largest one each
    satisfy ``|term| <= rel_tol*|partial| + abs_tol``.
    """
    pol = spec.truncation
    z = float(z)
    if z == 0.0:
        v = spec.coefficient(0) if spec.exponent(0) == 0 else 0.0
        return SeriesSum(v, 1, abs(v))
    logz = math.log(abs(z))
    negative = z < 0

    terms = []
    partial = 0.0
    small = 0
    prev_log = -math.inf
    for m in range(pol.max_terms):
        k = spec.exponent(m)
        la = spec.log_abs(m)
        if la == -math.inf:
            lt, term = -math.inf, 0.0
        else:
            lt = la + k * logz
            s = spec.sign(m)
            if negative and k % 2:
                s = -s
            term = s * math.exp(lt)
        terms.append(term)
        partial += term
        if lt <= prev_log and abs(term) <= pol.rel_tol * abs(partial) + pol.abs_tol:
            small += 1
            if small >= pol.consecutive_small:
                return SeriesSum(math.fsum(terms), m + 1, math.fsum(abs(t) for t in terms))
        else:
            small = 0
        if lt != -math.inf:
            prev_log = lt
    raise NonConvergence(f"series did not settle within {pol.max_terms} terms at z={z}")


# --------------------------------------------------------------------------
# coefficient families


class EulerWeight(tuple):
    """Polynomial weight ``a0 + a1*k + a2*k**2 + ...`` with ``k = 2m``.

    ``k`` is the eigenvalue of ``t d/dt`` on ``t^(2m)``, which lets the same weight be
    applied to Bessel functions directly (see :func:`weighted_bessel`).
    """

    def __new__(cls, *coeffs: float):
        return super().__new__(cls, tuple(float(a) for a in coeffs))

    def __call__(self, m: int) -> float:
        k = 2 * m
        return sum(a * k**i for i, a in enumerate(self))

    def times_k(self) -> "EulerWeight":
        """Weight of the series ``t d/dt`` applied term by term."""
        return EulerWeight(0.0, *self)

    def __repr__(self):
        return f"EulerWeight{tuple(self)}"


ONE = EulerWeight(1.0)
EVEN = EulerWeight(0.0, 1.0)          # 2m
ODD = EulerWeight(1.0, 1.0)           # 2m+1,     g'
ODD_SQ = EulerWeight(1.0, 2.0, 1.0)   # (2m+1)^2, (z g')'
NEXT = EulerWeight(1.0, 0.5)          # m+1,      h'
NEXT_SQ = EulerWeight(1.0, 1.0, 0.25)  # (m+1)^2,  (z h')'


def log_coefficient(nu: float, n: int, m: int) -> float:
    """log |c_m| for the coefficient of z^(2m+1) in g_{nu,n}."""
    return (math.lgamma(2 * m + nu + 1) + math.lgamma(nu - n + 1)
            - math.lgamma(m + 1) - m * LOG4
            - math.lgamma(2 * m - n + nu + 1) - math.lgamma(m + nu + 1))


def _alternating(m: int) -> int:
    return -1 if m % 2 else 1


def _positive(m: int) -> int:
    return 1


def family(nu: float, n: int, weight: Callable[[int], float] = ONE, *,
           variable: str = "z", shift: int = 0, alternating: bool = True,
           parity: str | None = None,
           truncation: TruncationPolicy = DEFAULT_TRUNCATION) -> SeriesSpec:
    """Series with coefficients ``weight(m) * c_{m+shift}``.

    ``variable="z"`` sums over even powers of the Bessel argument; ``variable="x"``
    sums over all powers of ``x = z**2`` (the variable of h).  ``parity`` overrides
    the exponent pattern when a family is odd in z.
    """
    if variable not in ("z", "x"):
        raise ValueError(f"unknown variable {variable!r}")
    if parity is None:
        parity = "even" if variable == "z" else "general"

    def log_abs(m: int) -> float:
        w = weight(m)
        if w == 0:
            return -math.inf
        return math.log(abs(w)) + log_coefficient(nu, n, m + shift)

    if alternating:
        def sign(m: int) -> int:
            w = weight(m)
            s = _alternating(m + shift)
            return -s if w < 0 else s
    else:
        sign = _positive
    return SeriesSpec(log_abs, sign, parity, truncation)


# Series that appear as numerator/denominator of logarithmic derivatives; keyed by
# the function whose zeros they describe.  Numerators are the term-wise
# derivatives of the denominators, written with the index shifted by one.
_LOG_DERIVATIVE_FAMILIES = {
    "g-prime": (lambda m: 2 * (m + 1) * (2 * m + 3), ODD, "z", "odd"),
    "h-prime": (lambda m: (m + 1) * (m + 2), NEXT, "x", "general"),
    "Delta": (lambda m: 2 * (m + 1) * (2 * m + 3) ** 2, ODD_SQ, "z", "odd"),
    "Theta": (lambda m: (m + 1) * (m + 2) ** 2, NEXT_SQ, "x", "general"),
}


def log_derivative_series(which: str, p: Params,
                          truncation: TruncationPolicy = DEFAULT_TRUNCATION):
    """(numerator, denominator) series of F'/F for F in {g', h', (zg')', (zh')'}."""
    try:
        num_w, den_w, var, num_parity = _LOG_DERIVATIVE_FAMILIES[which]
    except KeyError:
        raise ValueError(f"unknown family {which!r}") from None
    num = family(p.nu, p.n, num_w, variable=var, shift=1, parity=num_parity,
                 truncation=truncation)
    den = family(p.nu, p.n, den_w, variable=var, truncation=truncation)
    return num, den


# --------------------------------------------------------------------------
# Bessel-function route for large arguments


def weighted_bessel(nu: float, n: int, weight: EulerWeight, t):
    """``sum_m weight(m) c_m t^(2m)`` through scipy's Bessel functions.

    With s = n - nu and K = 2^nu Gamma(nu-n+1) the plain sum is K t^s J_nu^(n)(t).
    Each application of ``t d/dt`` to t^s sum_j alpha_j t^j J^(n+j) maps
    alpha_j -> (s+j) alpha_j + alpha_(j-1), which builds every power of k.
    Vectorized over ``t > 0``.
    """
    t = np.asarray(t, dtype=float)
    s = n - nu
    degree = len(weight) - 1
    total = [0.0] * (degree + 1)   # coefficient of t^j J^(n+j)
    alpha = [1.0]
    for a in weight:
        for j, c in enumerate(alpha):
            total[j] += a * c
        alpha = [(s + j) * (alpha[j] if j < len(alpha) else 0.0)
                 + (alpha[j - 1] if j > 0 else 0.0) for j in range(len(alpha) + 1)]
    combo = np.zeros_like(t)
    for j, c in enumerate(total):
        if c:
            combo = combo + c * t**j * special.jvp(nu, t, n + j)
    scale = np.exp(nu * LOG2 + math.lgamma(nu - n + 1) + s * np.log(t))
    return scale * combo


def weighted(nu: float, n: int, weight: EulerWeight, t: float,
             truncation: TruncationPolicy = DEFAULT_TRUNCATION) -> float:
    """Weighted even series in the Bessel argument, series or Bessel route by size."""
    if abs(t) <= SERIES_SWITCH:
        return family(nu, n, weight, truncation=truncation)(t)
    return float(weighted_bessel(nu, n, weight, abs(t)))


# --------------------------------------------------------------------------
# public evaluators


def eval_bessel_deriv(p: Params, z: float,
                      truncation: TruncationPolicy = DEFAULT_TRUNCATION) -> float:
    """J_nu^(n)(z) from its term-wise differentiated series.

    J_nu^(n)(z) = (z/2)^(nu-n) sum_m (-1)^m Gamma(2m+nu+1) / (m! 2^n Gamma(2m-n+nu+1)
    Gamma(m+nu+1)) (z/2)^(2m).

    Above SERIES_SWITCH the alternating series cancels too much and scipy's
    ``jvp`` is used instead.
    """
    nu, n = p.nu, p.n
    if z < 0:
        raise DomainError("z must be non-negative")
    if z == 0:
        if p.shift > 0:
            return 0.0
        if p.shift == 0:
            return math.exp(-n * LOG2 - math.lgamma(nu + 1))
        raise DomainError(f"J_nu^(n) has a pole at 0 when nu < n (nu={nu}, n={n})")
    return bessel_deriv_series(nu, n, z, truncation)


def bessel_deriv_series(nu: float, n: int, z: float,
                        truncation: TruncationPolicy = DEFAULT_TRUNCATION) -> float:
    """J_nu^(n)(z) for z > 0 and any nu >= 0, without the nu > n - 1 restriction.

    The coefficient ratio Gamma(2m+nu+1)/Gamma(2m-n+nu+1) is written as the
    falling factorial (2m+nu)(2m+nu-1)...(2m+nu-n+1), whose sign may differ from
    (-1)^m in the first few terms when nu < n - 1.
    """
    if not (nu >= 0 and n >= 0 and z > 0):
        raise DomainError("need nu >= 0, n >= 0 and z > 0")
    if z > SERIES_SWITCH:
        return float(special.jvp(nu, z, n))

    def falling(m: int) -> list[float]:
        return [2 * m + nu - i for i in range(n)]

    def log_abs(m: int) -> float:
        f = falling(m)
        if 0.0 in f:
            return -math.inf
        return (math.fsum(math.log(abs(v)) for v in f) - math.lgamma(m + 1) - n * LOG2
                - math.lgamma(m + nu + 1))

    def sign(m: int) -> int:
        negatives = sum(v < 0 for v in falling(m))
        return -1 if (m + negatives) % 2 else 1

    inner = SeriesSpec(log_abs, sign, "even", truncation)(z / 2)
    return inner * math.exp((nu - n) * math.log(z / 2))


def eval_normalized(kind: str, p: Params, z: float,
                    truncation: TruncationPolicy = DEFAULT_TRUNCATION) -> float:
    """f_{nu,n}(z), g_{nu,n}(z) or h_{nu,n}(z).

    g(z) = z * sum c_m z^(2m),  h(x) = x * sum c_m x^m,  f(z) = z * (sum c_m z^(2m))^(1/(nu-n)).
    """
    if z < 0:
        raise DomainError("argument must be non-negative")
    if kind == "g":
        return z * weighted(p.nu, p.n, ONE, z, truncation)
    if kind == "h":
        return z * weighted(p.nu, p.n, ONE, math.sqrt(z), truncation)
    if kind == "f":
        if p.nu == p.n:
            raise DomainError("f is undefined for nu = n")
        if z == 0:
            return 0.0
        base = weighted(p.nu, p.n, ONE, z, truncation)
        if base <= 0:
            raise DomainError(f"f needs z below the first zero of J_nu^(n); base={base:.3g} at z={z}")
        return z * base ** (1.0 / p.shift)
    raise ValueError(f"unknown normalization {kind!r}")


def _ratio(nu, n, num_w, den_w, r, variable, truncation, slope=False):
    num = family(nu, n, num_w, variable=variable, truncation=truncation)
    den = family(nu, n, den_w, variable=variable, truncation=truncation)
    d = den(r)
    if abs(d) <= truncation.abs_tol:
        raise PoleProximity(f"denominator {d:.3g} vanishes at r={r}")
    q = num(r) / d
    if not slope:
        return q
    # d/dr sum a_m r^(power*m) = (1/r) sum power*m a_m r^(power*m)
    power = 2 if variable == "z" else 1
    dnum = family(nu, n, lambda m: power * m * num_w(m), variable=variable, truncation=truncation)(r) / r
    dden = family(nu, n, lambda m: power * m * den_w(m), variable=variable, truncation=truncation)(r) / r
    return q, (dnum - q * dden) / d


def _check_r(r):
    if not r > 0:
        raise DomainError(f"radius must be positive, got {r}")


def _bessel_log_ratio(nu, n, r, truncation, slope):
    """r J^(n+1)(r) / J^(n)(r) - (nu - n) as a ratio of series, with optional slope."""
    return _ratio(nu, n, EVEN, ONE, r, "z", truncation, slope)


def star_quotient(kind: str, p: Params, r: float,
                  truncation: TruncationPolicy = DEFAULT_TRUNCATION, slope: bool = False):
    """r F'(r)/F(r); with ``slope=True`` also its r-derivative."""
    _check_r(r)
    if kind == "g":
        return _ratio(p.nu, p.n, ODD, ONE, r, "z", truncation, slope)
    if kind == "h":
        return _ratio(p.nu, p.n, NEXT, ONE, r, "x", truncation, slope)
    if kind == "f":
        p.require_above_n("the starlikeness quotient of f")
        out = _bessel_log_ratio(p.nu, p.n, r, truncation, slope)
        if slope:
            return 1.0 + out[0] / p.shift, out[1] / p.shift
        return 1.0 + out / p.shift
    raise ValueError(f"unknown normalization {kind!r}")


def convex_quotient(kind: str, p: Params, r: float,
                    truncation: TruncationPolicy = DEFAULT_TRUNCATION, slope: bool = False):
    """1 + r F''(r)/F'(r); with ``slope=True`` also its r-derivative."""
    _check_r(r)
    if kind == "g":
        return _ratio(p.nu, p.n, ODD_SQ, ODD, r, "z", truncation, slope)
    if kind == "h":
        return _ratio(p.nu, p.n, NEXT_SQ, NEXT, r, "x", truncation, slope)
    if kind == "f":
        p.require_above_n("the convexity quotient of f")
        # 1 + rJ^(n+2)/J^(n+1) + (1/(nu-n) - 1) rJ^(n+1)/J^(n), each log-ratio
        # being (nu - k) plus a ratio of the order-k series.
        lo = _bessel_log_ratio(p.nu, p.n, r, truncation, slope)
        hi = _bessel_log_ratio(p.nu, p.n + 1, r, truncation, slope)
        mix = 1.0 / p.shift - 1.0
        if slope:
            value = 1.0 + (p.shift - 1.0 + hi[0]) + mix * (p.shift + lo[0])
            return value, hi[1] + mix * lo[1]
        return 1.0 + (p.shift - 1.0 + hi) + mix * (p.shift + lo)
    raise ValueError(f"unknown normalization {kind!r}")


def eval_star_quotient(kind: str, p: Params, r: float,
                       truncation: TruncationPolicy = DEFAULT_TRUNCATION) -> float:
    return star_quotient(kind, p, r, truncation)


def eval_convex_quotient(kind: str, p: Params, r: float,
                         truncation: TruncationPolicy = DEFAULT_TRUNCATION) -> float:
    return convex_quotient(kind, p, r, truncation)


def modified_quotient(p: Params, r: float,
                      truncation: TruncationPolicy = DEFAULT_TRUNCATION, slope: bool = False):
    """i r J^(n+1)(ir) / J^(n)(ir) for n-1 < nu < n, with optional r-derivative.

    On the imaginary axis the alternating signs cancel, leaving

        (nu - n) + sum 2m |c_m| r^(2m) / sum |c_m| r^(2m).

    The factors Gamma(nu-n+1) and 2^(-nu) common to every |c_m| cancel in the ratio,
    as does the 2^(2m) that turns (r/2)^(2m) into r^(2m)/4^m inside c_m.  Both series
    have positive coefficients with increasing quotient sequence 2m, so the value
    rises monotonically from nu - n.
    """
    if not p.n - 1 < p.nu < p.n:
        raise DomainError(f"the modified quotient needs n-1 < nu < n, got nu={p.nu}, n={p.n}")
    _check_r(r)
    num = family(p.nu, p.n, EVEN, alternating=False, truncation=truncation)
    den = family(p.nu, p.n, ONE, alternating=False, truncation=truncation)
    d = den(r)
    q = num(r) / d
    if not slope:
        return p.shift + q
    dnum = family(p.nu, p.n, EulerWeight(0, 0, 1), alternating=False, truncation=truncation)(r) / r
    dden = num(r) / r
    return p.shift + q, (dnum - q * dden) / d


def eval_modified_quotient(p: Params, r: float,
                           truncation: TruncationPolicy = DEFAULT_TRUNCATION) -> float:
    return modified_quotient(p, r, truncation)
