# Hyperbolic polynomials, Sturm counting and Jensen polynomials.
#
# A real polynomial is hyperbolic when all its roots are real.  Root counts come
# from exact Sturm chains over rationals, so repeated roots and near-collisions
# do not confuse them.

import math

from bessel_radii import (Params, Poly, count_real_roots, is_hyperbolic, jensen_poly,
                          verify_lemma3, verify_lemma5)
from bessel_radii.lp_check import bessel_mu

p = Poly.from_roots([1, 2, 2, 5])
print("p =", p.coefficients)
print("real roots:", count_real_roots(p), " in (1, 2]:", count_real_roots(p, (1, 2)))

# With p(0) = 1 and positive roots x_1 <= x_2 <= ..., the polynomial C p - x p' is
# again hyperbolic, and it has a root below x_1 exactly when C < 0.
for C in (-1.0, 0.5):
    r = verify_lemma3(p, C)
    print(f"C = {C:+.1f}: hyperbolic {r.hyperbolic}, roots below x_1 = {r.roots_of_q_below}")

# Jensen polynomials of exp are (1 + x)^m.
print("\nJensen(exp, 5) =", jensen_poly([1] * 6, 5).coefficients)

# For the Bessel family the Jensen polynomials stay hyperbolic, and the smallest
# root, read in z through z ~ 2 sqrt(m x), approaches the first zero as m grows.
q = Params(2.5, 1)
for m in (4, 8, 16):
    P = jensen_poly(bessel_mu(q, m + 1), m)
    print(f"m = {m:2d}: hyperbolic {is_hyperbolic(P)}, "
          f"{count_real_roots(P, (0, math.inf))} positive roots")

r = verify_lemma5(q, -0.5, 8)
print(f"\nzero of a F - x F' precedes the first Bessel zero: {r.precedence}")
print(f"  smallest root of W {r.smallest_w_root:.6f} <= Jensen root {r.smallest_jensen_root:.6f}")
print(f"  Jensen estimate of j_1 {r.jensen_zero_estimate:.4f}, actual {r.first_zero:.4f}")
