"""Self-check suites run by ``bessel-radii verify``.

Each suite returns a :class:`SuiteResult` listing every check it made, so that a
failure report names the exact parameters involved.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import BesselRadiiError
from .lp_check import Poly, verify_lemma3, verify_lemma5
from .radii import convex_radius, starlike_radius
from .rayleigh import (TARGETS, ZERO_FAMILY, auxiliary_sums, numeric_power_sum,
                       radius_bounds, zero_power_sum)
from .series import Params, bessel_deriv_series, eval_bessel_deriv
from .tables import run_table
from .zeros import check_interlacing, find_zeros

DEFAULT_GRID_NU = (0.5, 1.5, 2.5, 3.5)
DEFAULT_ORDERS = (0, 1, 2, 3)
SUM_RTOL = 1e-6


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.passed + len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, label: str) -> None:
        if condition:
            self.passed += 1
        else:
            self.failures.append(label)


def _grid(grid_nu, orders=DEFAULT_ORDERS):
    for nu in grid_nu:
        for n in orders:
            if nu > n - 1:
                yield Params(nu, n)


def _guard(suite: SuiteResult, label: str, fn: Callable[[], bool]) -> None:
    try:
        suite.check(bool(fn()), label)
    except BesselRadiiError as exc:
        suite.failures.append(f"{label}: {type(exc).__name__}: {exc}")


def interlacing_suite(grid_nu) -> SuiteResult:
    suite = SuiteResult("interlacing")
    for p in _grid(grid_nu):
        if not p.nu > p.n:
            continue
        a = find_zeros("J-deriv", p, 10)
        b = find_zeros("J-deriv", Params(p.nu, p.n + 1), 10)
        _guard(suite, f"J^({p.n}) vs J^({p.n + 1}) nu={p.nu}", lambda: check_interlacing(a, b))
    return suite


def sums_suite(grid_nu) -> SuiteResult:
    suite = SuiteResult("sum-identities")
    for p in _grid(grid_nu):
        for power in (2, 4):
            exact = zero_power_sum(p, power).value
            _guard(suite, f"j{power} nu={p.nu} n={p.n}",
                   lambda: abs(numeric_power_sum("J-deriv", p, power) / exact - 1) < SUM_RTOL)
        for fam in ("sigma", "rho", "kappa", "omega"):
            for power, sv in zip((2, 4), auxiliary_sums(fam, p)):
                _guard(suite, f"{sv.family} nu={p.nu} n={p.n}",
                       lambda: abs(numeric_power_sum(ZERO_FAMILY[fam], p, power) / sv.value - 1)
                       < SUM_RTOL)
    return suite


def bounds_suite(grid_nu) -> SuiteResult:
    suite = SuiteResult("bounds-sandwich")
    for p in _grid(grid_nu):
        for target in TARGETS:
            prop, kind = target.split("-")
            solver = starlike_radius if prop == "starlike" else convex_radius
            _guard(suite, f"{target} nu={p.nu} n={p.n}",
                   lambda: radius_bounds(target, p).contains(solver(kind, p).radius))
    return suite


def monotonicity_suite(grid_nu) -> SuiteResult:
    suite = SuiteResult("monotonicity")
    betas = (0.0, 0.25, 0.5, 0.75)
    for p in _grid(grid_nu, (0, 1, 2)):
        for kind in "fgh":
            for prop, solver in (("starlike", starlike_radius), ("convex", convex_radius)):
                if kind == "f" and not p.nu > p.n:
                    continue
                label = f"{prop} {kind} nu={p.nu} n={p.n}"
                _guard(suite, label + " decreasing in beta", lambda: _strictly_decreasing(
                    solver(kind, Params(p.nu, p.n, b)).radius for b in betas))
                if not p.nu > p.n:
                    continue
                nxt = Params(p.nu, p.n + 1)
                if kind == "f" and not nxt.nu > nxt.n:
                    continue
                _guard(suite, label + " decreasing in n",
                       lambda: solver(kind, nxt).radius < solver(kind, p).radius)
            if kind != "f" or p.nu > p.n:
                _guard(suite, f"convex <= starlike {kind} nu={p.nu} n={p.n}",
                       lambda: convex_radius(kind, p).radius <= starlike_radius(kind, p).radius)
    return suite


def _strictly_decreasing(values: Iterable[float]) -> bool:
    values = list(values)
    return all(a > b for a, b in zip(values, values[1:]))


def lemma_suite(seed: int = 0) -> SuiteResult:
    suite = SuiteResult("lemmas")
    rng = random.Random(seed)
    for i in range(100):
        roots = sorted(rng.uniform(0.05, 10) for _ in range(rng.randint(1, 6)))
        p = Poly.from_roots(roots)
        for C in (rng.uniform(-5, -1e-3), rng.uniform(1e-3, 5)):
            _guard(suite, f"lemma3 #{i} C={C:.3f}", lambda: verify_lemma3(p, C).passed)
    for nu in (0.5, 2.5, 3.5):
        for n in (0, 1, 2):
            if not nu > n - 1:
                continue
            for a in (-1.0, -0.5, -0.25):
                _guard(suite, f"lemma5 nu={nu} n={n} a={a}",
                       lambda: verify_lemma5(Params(nu, n), a, 8).passed)
    return suite


def half_integer_closed_form(nu: float, n: int, z: float) -> float:
    """n-th derivative (n <= 2) of J_{1/2} or J_{3/2} from elementary functions.

    Writing J = sqrt(2/(pi z)) u gives J' = c (u' - u/(2z)) and
    J'' = c (u'' - u'/z + 3u/(4z^2)).
    """
    s, co = math.sin(z), math.cos(z)
    if nu == 0.5:
        u = (s, co, -s)
    elif nu == 1.5:
        u = (s / z - co, s + co / z - s / z ** 2, co - s / z - 2 * co / z ** 2 + 2 * s / z ** 3)
    else:
        raise ValueError("closed forms are provided for nu = 1/2 and 3/2")
    c = math.sqrt(2 / (math.pi * z))
    return c * (u[0], u[1] - u[0] / (2 * z), u[2] - u[1] / z + 3 * u[0] / (4 * z * z))[n]


def _series_value(nu: float, n: int, z: float) -> float:
    # J_{1/2}'' lies outside the nu > n - 1 domain of eval_bessel_deriv
    if nu > n - 1:
        return eval_bessel_deriv(Params(nu, n), z)
    return bessel_deriv_series(nu, n, z)


def oracle_suite() -> SuiteResult:
    suite = SuiteResult("oracle-agreement")
    grid = [0.1 + 9.9 * i / 199 for i in range(200)]
    for nu, n in ((0.5, 0), (0.5, 1), (0.5, 2), (1.5, 0), (1.5, 1), (1.5, 2)):
        worst = max(abs(_series_value(nu, n, z) / half_integer_closed_form(nu, n, z) - 1)
                    for z in grid)
        suite.check(worst < 1e-10, f"J^({n})_{nu}: worst relative error {worst:.2e}")
    return suite


def table_suite() -> SuiteResult:
    suite = SuiteResult("tables")
    for which in ("starlike", "convex"):
        for cell in run_table(which):
            if cell.anomaly:
                continue
            suite.check(cell.matches, f"{which} {cell.kind} n={cell.n} beta={cell.beta}: "
                                      f"{cell.computed} vs {cell.published}")
    return suite


SUITES = ("tables", "interlacing", "sum-identities", "bounds-sandwich", "monotonicity",
          "lemmas", "oracle-agreement")


def run_verify(grid_nu=DEFAULT_GRID_NU) -> list[SuiteResult]:
    """Run every suite; the caller decides how to report."""
    for nu in grid_nu:
        Params(nu)  # validates the order
    return [table_suite(), interlacing_suite(grid_nu), sums_suite(grid_nu),
            bounds_suite(grid_nu), monotonicity_suite(grid_nu), lemma_suite(), oracle_suite()]
