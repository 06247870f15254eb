"""Radii of starlikeness and convexity for normalized derivatives of Bessel functions.

The three normalizations of J_nu^(n), written with the Bessel argument z, are

    f(z) = (2^nu Gamma(nu-n+1) z^(n-nu) J_nu^(n)(z))^(1/(nu-n)) * z,
    g(z) = 2^nu Gamma(nu-n+1) z^(1+n-nu) J_nu^(n)(z),
    h(x) = 2^nu Gamma(nu-n+1) x^(1-(nu-n)/2) J_nu^(n)(sqrt(x)),

each equal to the identity to first order at the origin.
"""
from .errors import (BesselRadiiError, BracketFailure, DomainError, IllConditioned,
                     LengthError, LengthMismatch, NonConvergence, PoleProximity,
                     ScanExhausted)
from .lp_check import (Poly, count_real_roots, is_hyperbolic, jensen_poly, verify_lemma3,
                       verify_lemma5)
from .radii import RadiusResult, convex_radius, radius, starlike_radius
from .rayleigh import BoundsPair, SumValue, auxiliary_sums, radius_bounds, zero_power_sum
from .series import (Params, SeriesSpec, TruncationPolicy, eval_bessel_deriv,
                     eval_convex_quotient, eval_modified_quotient, eval_normalized,
                     eval_star_quotient)
from .tables import run_table
from .verify import run_verify
from .zeros import ZeroSequence, check_interlacing, find_zeros

__version__ = "0.1.0"

__all__ = [
    "BesselRadiiError", "BracketFailure", "DomainError", "IllConditioned", "LengthError",
    "LengthMismatch", "NonConvergence", "PoleProximity", "ScanExhausted",
    "Poly", "count_real_roots", "is_hyperbolic", "jensen_poly", "verify_lemma3", "verify_lemma5",
    "RadiusResult", "convex_radius", "radius", "starlike_radius",
    "BoundsPair", "SumValue", "auxiliary_sums", "radius_bounds", "zero_power_sum",
    "Params", "SeriesSpec", "TruncationPolicy", "eval_bessel_deriv", "eval_convex_quotient",
    "eval_modified_quotient", "eval_normalized", "eval_star_quotient",
    "run_table", "run_verify", "ZeroSequence", "check_interlacing", "find_zeros",
]
