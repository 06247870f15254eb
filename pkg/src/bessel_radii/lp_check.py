"""Checks behind the Laguerre-Polya argument: Jensen polynomials and hyperbolicity.

Root counting uses a Sturm chain in exact rational arithmetic.  Float
coefficients are converted to :class:`fractions.Fraction` without rounding, so the
count is exact for the polynomial as given; the only loss of accuracy is in how
the coefficients themselves were computed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, IllConditioned, LengthError
from .series import EulerWeight, Params, weighted
from .zeros import first_zero

MAX_JENSEN_ORDER = 30


def _exact(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    c = float(c)
    if not math.isfinite(c):
        raise IllConditioned(f"non-finite coefficient {c!r}")
    return Fraction(c)


class Poly:
    """Polynomial with exact rational coefficients in ascending degree order."""

    __slots__ = ("coef",)

    def __init__(self, coefficients: Sequence):
        coef = [_exact(c) for c in coefficients]
        while coef and coef[-1] == 0:
            coef.pop()
        self.coef: tuple[Fraction, ...] = tuple(coef)

    @classmethod
    def from_roots(cls, roots, constant_term_one: bool = True) -> "Poly":
        """prod (1 - x/r) if ``constant_term_one`` (roots must be nonzero), else prod (x - r)."""
        p = cls([1])
        for r in roots:
            r = _exact(r)
            p = p * (cls([1, -1 / r]) if constant_term_one else cls([-r, 1]))
        return p

    @property
    def degree(self) -> int:
        return len(self.coef) - 1  # zero polynomial has degree -1

    @property
    def coefficients(self) -> list[float]:
        return [float(c) for c in self.coef]

    def is_zero(self) -> bool:
        return not self.coef

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coef):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coef)][1:])

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coef, other.coef
        n = max(len(a), len(b))
        return Poly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coef])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly([c * _exact(other) for c in self.coef])
        if self.is_zero() or other.is_zero():
            return Poly([])
        out = [Fraction(0)] * (len(self.coef) + len(other.coef) - 1)
        for i, a in enumerate(self.coef):
            for j, b in enumerate(other.coef):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def times_x(self) -> "Poly":
        return Poly([0, *self.coef])

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coef)
        quot = [Fraction(0)] * max(len(rem) - len(other.coef) + 1, 1)
        lead = other.coef[-1]
        while len(rem) >= len(other.coef) and any(rem):
            shift = len(rem) - len(other.coef)
            factor = rem[-1] / lead
            quot[shift] = factor
            for i, c in enumerate(other.coef):
                rem[shift + i] -= factor * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quot), Poly(rem)

    def monic(self) -> "Poly":
        return Poly([c / self.coef[-1] for c in self.coef])

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coef == other.coef

    def __hash__(self):
        return hash(self.coef)

    def __repr__(self):
        return f"Poly({self.coefficients})"


def gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


# ---------------------------------------------------------------- root counting

def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-chain[-2].divmod(chain[-1])[1])
    return chain[:-1]


def _sign_at(q: Poly, x) -> int:
    if x == math.inf or x == -math.inf:
        lead = q.coef[-1]
        s = 1 if lead > 0 else -1
        return s if (x > 0 or q.degree % 2 == 0) else -s
    v = q(x)
    return (v > 0) - (v < 0)


def _variations(chain: list[Poly], x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _endpoint(x):
    if isinstance(x, float) and math.isinf(x):
        return x
    if isinstance(x, float) and math.isnan(x):
        raise IllConditioned("NaN interval endpoint")
    return _exact(x)


def _chains(p: Poly) -> list[list[Poly]]:
    """Sturm chains of the square-free factors p/gcd(p,p'), gcd/gcd(gcd,gcd'), ..."""
    if p.is_zero():
        raise DomainError("the zero polynomial has no finite root count")
    chains = []
    while p.degree > 0:
        g = gcd(p, p.derivative())
        chains.append(_sturm_chain(p.divmod(g)[0]))
        p = g
    return chains


def _count(chains, lo, hi) -> int:
    lo, hi = _endpoint(lo), _endpoint(hi)
    if not lo < hi:
        return 0
    return sum(_variations(c, lo) - _variations(c, hi) for c in chains)


def count_real_roots(p: Poly, interval=(-math.inf, math.inf)) -> int:
    """Number of real roots of ``p`` in (lo, hi], counted with multiplicity."""
    return _count(_chains(p), *interval)


def is_hyperbolic(p: Poly) -> bool:
    """True when every root of ``p`` is real."""
    return count_real_roots(p) == p.degree


def smallest_positive_root(p: Poly, rel_tol: float = 1e-15) -> tuple[Fraction, Fraction]:
    """Isolating interval (a, b] of the smallest positive root of ``p``."""
    chains = _chains(p)
    if _count(chains, 0, math.inf) == 0:
        raise DomainError("polynomial has no positive root")
    hi = Fraction(1)
    while _count(chains, 0, hi) == 0:
        hi *= 2
    lo = Fraction(0)
    while hi - lo > rel_tol * hi:
        # a float midpoint keeps the rationals short
        mid = Fraction(float((lo + hi) / 2))
        if not lo < mid < hi:
            break
        if _count(chains, 0, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return lo, hi


# ---------------------------------------------------------------- Jensen polynomials

def jensen_poly(maclaurin_mu: Sequence, m: int) -> Poly:
    """P_m(x) = sum_{k<=m} C(m, k) mu_k x^k."""
    if m < 0:
        raise DomainError("order m must be non-negative")
    if len(maclaurin_mu) < m + 1:
        raise LengthError(f"need {m + 1} Maclaurin coefficients, got {len(maclaurin_mu)}")
    return Poly([math.comb(m, k) * _exact(maclaurin_mu[k]) for k in range(m + 1)])


def bessel_mu(p: Params, count: int) -> list[Fraction]:
    """Coefficients mu_k with J_nu^(n) normalized = sum mu_k s^k / k!, where s = z^2 / 4.

    mu_k = (-1)^k (2k+nu)...(2k+nu-n+1) / ((nu-n+1)...(nu+k)) is a finite product,
    evaluated exactly in the binary value of nu.
    """
    nu, n = Fraction(p.nu), p.n
    out = []
    for k in range(count):
        num = math.prod((2 * k + nu - i for i in range(n)), start=Fraction(1))
        den = math.prod((nu - n + i for i in range(1, n + k + 1)), start=Fraction(1))
        out.append((-1) ** k * num / den)
    return out


# ---------------------------------------------------------------- lemma reports

@dataclass(frozen=True)
class Lemma3Report:
    q: Poly
    constant: float
    hyperbolic: bool
    smallest_root_of_p: float
    roots_of_q_below: int  # roots of q in (0, smallest root of p)
    passed: bool


def verify_lemma3(p: Poly, C: float) -> Lemma3Report:
    """For p with p(0) = 1 and only positive real roots x_1 <= ..., check that
    q = C p - x p' is hyperbolic and has a root in (0, x_1) exactly when C < 0.
    """
    if p.degree < 1 or p(0) != 1:
        raise DomainError("p must be non-constant with p(0) = 1")
    if count_real_roots(p, (0, math.inf)) != p.degree:
        raise DomainError("p must have only positive real roots")
    q = p * C - p.derivative().times_x()
    hyper = is_hyperbolic(q)
    a, b = smallest_positive_root(p)
    # Roots shared with p (repeated roots of p) are never below x_1; divide them out
    # so the isolating interval can be shrunk until it holds no root of q.
    common = gcd(p, q)
    reduced = q.divmod(common)[0] if common.degree > 0 else q
    while count_real_roots(reduced, (a, b)) != 0:
        if b - a < Fraction(1, 10 ** 40):
            raise IllConditioned("cannot separate the roots of q from the smallest root of p")
        a, b = smallest_positive_root_refine(p, a, b)
    below = count_real_roots(reduced, (0, a))
    # A root at exactly 0 (C = 0) does not lie in the open interval.
    passed = hyper and ((below >= 1) == (C < 0))
    return Lemma3Report(q, C, hyper, float(b), below, passed)


def smallest_positive_root_refine(p: Poly, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    mid = (a + b) / 2
    return (a, mid) if count_real_roots(p, (a, mid)) >= 1 else (mid, b)


@dataclass(frozen=True)
class Lemma5Report:
    params: Params
    a: float
    m: int
    jensen_hyperbolic: bool
    w_hyperbolic: bool
    smallest_jensen_root: float
    smallest_w_root: float
    precedence: bool
    function_sign_change: bool
    first_zero: float  # first positive zero of J_nu^(n)
    jensen_zero_estimate: float  # 2 sqrt(m * root): Bessel-argument image of the Jensen root

    @property
    def passed(self) -> bool:
        return (self.jensen_hyperbolic and self.w_hyperbolic and self.precedence
                and self.function_sign_change)


def verify_lemma5(p: Params, a: float, m: int = 8) -> Lemma5Report:
    """Check that a P_m - s P_m' has its smallest positive root before that of P_m.

    P_m is the order-m Jensen polynomial of J_nu^(n) in s = z^2/4, and ``a < 0``.
    Also checks the function-level statement: a J - (t/2) J' style combination,
    computed as sum (a - m) c_m t^(2m), changes sign on (0, j_1].
    """
    if not p.nu > p.n - 1:
        raise DomainError(f"need nu > n - 1, got nu={p.nu}, n={p.n}")
    if not a < 0:
        raise DomainError("a must be negative")
    if m > MAX_JENSEN_ORDER:
        raise IllConditioned(f"Jensen order {m} exceeds {MAX_JENSEN_ORDER}; coefficients lose accuracy")
    if m < 1:
        raise DomainError("m must be at least 1")
    P = jensen_poly(bessel_mu(p, m + 1), m)
    W = P * a - P.derivative().times_x()
    pos_P = count_real_roots(P, (0, math.inf))
    pos_W = count_real_roots(W, (0, math.inf))
    hyp_P = is_hyperbolic(P) and pos_P == P.degree
    hyp_W = is_hyperbolic(W) and pos_W == W.degree
    root_P = float(smallest_positive_root(P)[1])
    root_W = float(smallest_positive_root(W)[1])

    j1 = first_zero("J-deriv", p)
    weight = EulerWeight(a, -0.5)  # a - m in terms of k = 2m
    near0 = weighted(p.nu, p.n, weight, 1e-3 * j1)
    at_j1 = weighted(p.nu, p.n, weight, j1)
    sign_change = near0 < 0 and at_j1 > 0
    return Lemma5Report(p, a, m, hyp_P, hyp_W, root_P, root_W, root_W <= root_P,
                        sign_change, j1, 2 * math.sqrt(m * root_P))
