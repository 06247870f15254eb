# Recompute the published grids of radii at nu = 2.5 (starlikeness) and nu = 3.5
# (convexity) and compare cell by cell.
#
# One convexity cell, g with n = 0 and beta = 0, is printed as 0.5234 although the
# same row gives 1.1461 at beta = 0.5.  Radii decrease in beta, so the printed
# value cannot be right; the computed 1.5234 is reported with a flag.

from bessel_radii.tables import run_table

for which in ("starlike", "convex"):
    cells = run_table(which)
    print(f"\n{which}")
    print("kind  n  beta   computed    printed   |diff|")
    for c in cells:
        flag = "  <- flagged" if c.anomaly else ""
        print(f"  {c.kind}   {c.n}  {c.beta:.1f}  {c.computed:9.4f}  {c.published:9.4f}  "
              f"{abs(c.computed - c.published):.1e}{flag}")
    bad = [c for c in cells if not c.matches and not c.anomaly]
    print(f"{len(cells) - len(bad)}/{len(cells)} cells agree to 1e-3 or are flagged")
