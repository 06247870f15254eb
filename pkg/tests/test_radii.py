import math

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from bessel_radii import (BracketFailure, DomainError, Params, convex_radius, find_zeros,
                          radius_bounds, starlike_radius)
from bessel_radii.radii import _solve
from bessel_radii.series import modified_quotient

# Golden value of the modified-branch radius r*(f_{1/2,1}), from the mpmath oracle.
F_HALF_ONE = 0.6087513293014175


@pytest.mark.parametrize("kind,nu,n,beta,expected", [
    ("f", 2.5, 0, 0.0, 3.6328), ("h", 2.5, 3, 0.0, 0.3543), ("g", 2.5, 1, 0.5, 1.3307)])
def test_starlike_examples(kind, nu, n, beta, expected):
    assert starlike_radius(kind, Params(nu, n, beta)).radius == pytest.approx(expected, abs=1e-3)


@pytest.mark.parametrize("kind,nu,n,beta,expected", [
    ("f", 3.5, 1, 0.0, 1.8179), ("g", 3.5, 3, 0.5, 0.4350), ("h", 3.5, 0, 0.5, 3.7194)])
def test_convex_examples(kind, nu, n, beta, expected):
    assert convex_radius(kind, Params(nu, n, beta)).radius == pytest.approx(expected, abs=1e-3)


def test_modified_branch_golden():
    res = starlike_radius("f", Params(0.5, 1))
    assert res.branch == "modified"
    assert res.radius == pytest.approx(F_HALF_ONE, rel=1e-12)
    assert res.radius == pytest.approx(float(oracles.starlike_radius("f", 0.5, 1)), rel=1e-12)
    # the root of the increasing quotient is where it crosses beta (nu - n) = 0
    assert abs(modified_quotient(Params(0.5, 1), res.radius)) < 1e-12


GRID = [(kind, nu, n, beta) for kind in "fgh" for nu in (2.5, 3.5) for n in range(4)
        for beta in (0.0, 0.5)]


@pytest.mark.parametrize("kind,nu,n,beta", GRID)
def test_starlike_against_bessel_oracle(kind, nu, n, beta):
    got = starlike_radius(kind, Params(nu, n, beta)).radius
    ref = float(oracles.starlike_radius(kind, nu, n, beta))
    assert got == pytest.approx(ref, rel=1e-10)


@pytest.mark.parametrize("kind,nu,n,beta", [g for g in GRID if g[0] != "f" or g[1] > g[2]])
def test_convex_against_bessel_oracle(kind, nu, n, beta):
    got = convex_radius(kind, Params(nu, n, beta)).radius
    ref = float(oracles.convex_radius(kind, nu, n, beta))
    assert got == pytest.approx(ref, rel=1e-10)


@settings(max_examples=30, deadline=None)
@given(kind=st.sampled_from("fgh"), prop=st.sampled_from(["starlike", "convex"]),
       nu=st.floats(0.1, 7.0), n=st.integers(0, 3), beta=st.floats(0.0, 0.95))
def test_result_certificate(kind, prop, nu, n, beta):
    nu = max(nu, n - 1 + 0.05)
    if kind == "f" and (abs(nu - n) < 0.05 or (prop == "convex" and nu <= n)):
        nu = n + 0.3
    p = Params(nu, n, beta)
    res = (starlike_radius if prop == "starlike" else convex_radius)(kind, p)
    lo, hi = res.bracket
    assert lo < res.radius < hi or lo == res.radius == hi
    assert abs(res.residual) < 1e-10
    if prop == "starlike" and res.branch == "principal":
        j1 = find_zeros("J-deriv", p, 1).first
        assert res.radius < (j1 * j1 if kind == "h" else j1)
    if prop == "convex" and kind == "f":
        assert res.radius < find_zeros("J-deriv", Params(nu, n + 1), 1).first


@pytest.mark.parametrize("kind", "fgh")
@pytest.mark.parametrize("prop,nu", [("starlike", 2.5), ("convex", 3.5)])
def test_decreasing_in_beta(kind, prop, nu):
    solver = starlike_radius if prop == "starlike" else convex_radius
    for n in range(3):
        radii = [solver(kind, Params(nu, n, b)).radius for b in (0, 0.25, 0.5, 0.75)]
        assert all(a > b for a, b in zip(radii, radii[1:]))


@pytest.mark.parametrize("kind", "fgh")
@pytest.mark.parametrize("prop,nu", [("starlike", 2.5), ("convex", 3.5)])
def test_decreasing_in_n(kind, prop, nu):
    solver = starlike_radius if prop == "starlike" else convex_radius
    for beta in (0.0, 0.5):
        radii = [solver(kind, Params(nu, n, beta)).radius for n in range(3)]
        assert all(a > b for a, b in zip(radii, radii[1:]))


@pytest.mark.parametrize("kind", "fgh")
@pytest.mark.parametrize("nu", [2.5, 3.5])
def test_convex_inside_starlike(kind, nu):
    for n in range(4):
        if kind == "f" and not nu > n:
            continue
        for beta in (0.0, 0.5):
            p = Params(nu, n, beta)
            assert convex_radius(kind, p).radius <= starlike_radius(kind, p).radius


def test_beta_zero_radii_inside_bounds():
    p = Params(1.5, 2)
    assert radius_bounds("starlike-g", p).contains(starlike_radius("g", p).radius)
    assert radius_bounds("starlike-h", p).contains(starlike_radius("h", p).radius)


def test_h_radius_in_bessel_argument():
    res = starlike_radius("h", Params(2.5, 0))
    assert res.variable == "x"
    assert res.radius == pytest.approx(11.1696, abs=1e-3)
    assert res.in_bessel_argument() == pytest.approx(math.sqrt(res.radius))


def test_rejections():
    with pytest.raises(DomainError):
        starlike_radius("f", Params(2.0, 2))
    with pytest.raises(DomainError):
        convex_radius("f", Params(0.5, 1))
    with pytest.raises(DomainError):
        convex_radius("f", Params(1.0, 1))
    with pytest.raises(ValueError):
        starlike_radius("q", Params(2.5))


def test_same_sign_bracket_is_reported():
    with pytest.raises(BracketFailure):
        _solve(lambda r, slope: 1.0 if not slope else (1.0, 0.0), 0.1, 1.0)
