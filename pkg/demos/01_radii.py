# Radii of starlikeness and convexity for the three normalizations of J_nu^(n).
#
# f, g and h all start like the identity at the origin.  The radius of
# starlikeness of order beta is where Re(z F'/F) first drops to beta on a circle;
# on the positive axis the quotient is real and decreasing, so the radius is the
# first crossing.  Convexity is the same story for 1 + z F''/F'.

import numpy as np

from bessel_radii import Params, convex_radius, eval_normalized, eval_star_quotient, starlike_radius

p = Params(2.5, 1)

# The normalized functions look like z near the origin.
for kind in "fgh":
    z = 1e-3
    print(f"{kind}(1e-3)/1e-3 = {eval_normalized(kind, p, z) / z:.12f}")

# The starlikeness quotient of g, sampled on the real axis, is 1 at the origin and
# decreases through zero at the radius of order 0.
r = np.linspace(0.05, 2.2, 8)
print("\nr      r g'(r)/g(r)")
for ri in r:
    print(f"{ri:.3f}  {eval_star_quotient('g', p, ri):+.6f}")

res = starlike_radius("g", p)
print(f"\nstarlike radius of g (nu=2.5, n=1): {res.radius:.12f}")
print(f"  certified bracket {res.bracket}, residual {res.residual:.1e}")

# Raising beta shrinks the radius; convexity radii sit inside starlikeness radii.
print("\nbeta   starlike(g)   convex(g)")
for beta in (0.0, 0.25, 0.5, 0.75):
    q = Params(2.5, 1, beta)
    print(f"{beta:.2f}   {starlike_radius('g', q).radius:.8f}    {convex_radius('g', q).radius:.8f}")

# h is a function of x = z^2, and its radii are reported in that variable.
h = starlike_radius("h", Params(2.5, 0))
print(f"\nstarlike radius of h (nu=2.5, n=0): {h.radius:.6f} in x, "
      f"{h.in_bessel_argument():.6f} in the Bessel argument")

# When n - 1 < nu < n the f equation changes form and the solver uses the
# modified Bessel quotient instead.
m = starlike_radius("f", Params(0.5, 1))
print(f"\nstarlike radius of f (nu=0.5, n=1): {m.radius:.12f}  [{m.branch} branch]")
