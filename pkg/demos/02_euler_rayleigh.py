# Power sums of reciprocal zeros, and the bounds they give on a radius.
#
# An entire function F(u) = 1 + a1 u + a2 u^2 + ... with only positive real zeros
# zeta_k satisfies sum 1/zeta_k = -a1 and sum 1/zeta_k^2 = a1^2 - 2 a2.  For the
# Bessel families these come out as rational functions of nu, and they trap the
# smallest zero between 1/s1 and s1/s2.

import math

from bessel_radii import (Params, auxiliary_sums, find_zeros, radius_bounds, starlike_radius,
                          convex_radius, zero_power_sum)
from bessel_radii.rayleigh import numeric_power_sum

p = Params(2.5, 1)

# Closed forms against a direct sum over 200 computed zeros plus a tail estimate.
for power in (2, 4):
    closed = zero_power_sum(p, power).value
    numeric = numeric_power_sum("J-deriv", p, power)
    print(f"sum j^-{power}: closed {closed:.15f}  numeric {numeric:.15f}  "
          f"rel diff {abs(numeric / closed - 1):.1e}")

# The same works for the zeros of g' (sigma sums) and of (z g')' (kappa sums).
for fam, which in (("sigma", "g-prime"), ("kappa", "Delta")):
    s1, s2 = auxiliary_sums(fam, p)
    print(f"{s1.family}: closed {s1.value:.12f}  numeric {numeric_power_sum(which, p, 2):.12f}")

# The first zero is trapped between 1/sqrt(s1) and sqrt(s1/s2).
s1, s2 = zero_power_sum(p, 2).value, zero_power_sum(p, 4).value
j1 = find_zeros("J-deriv", p, 1).first
print(f"\n{1 / math.sqrt(s1):.6f} < j_1 = {j1:.6f} < {math.sqrt(s1 / s2):.6f}")

# The radius bounds follow the same pattern.  For nu = 3/2, n = 2 the numbers are
# rational, and the computed radii land strictly inside.
q = Params(1.5, 2)
for target, solver, kind in (("starlike-g", starlike_radius, "g"),
                             ("starlike-h", starlike_radius, "h"),
                             ("convex-g", convex_radius, "g")):
    b = radius_bounds(target, q)
    r = solver(kind, q).radius
    extra = "" if b.extra_upper is None else f"  (second upper bound {b.extra_upper:.6f})"
    print(f"{target:11s} {b.lower:.6f} < {r:.6f} < {b.upper:.6f}{extra}")
