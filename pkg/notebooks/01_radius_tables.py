# %% [markdown]
# # Radius tables
#
# Each radius is the root in (0, 1) of an explicit equation.  `solve` bisects
# to a 1e-13 bracket and reports whether the derivative sign argument that
# makes the root unique holds on a grid.

# %%
from bohrradii import RadiusKind, RadiusProblem, solve
from bohrradii.tables import K_VALUES, TABLES

res = solve(RadiusProblem(RadiusKind.REFINED_RK, 2))
print(res.root, res.bracket_width, res.monotonicity_certified)

# %% [markdown]
# Regenerate every reference table and compare at printed precision.

# %%
for spec in TABLES.values():
    worst = max(abs(solve(spec.problem(k)).root - float(v)) / spec.tolerance(v)
                for k, v in spec.values.items())
    print(f"{spec.which:4s} {spec.caption:45s} worst error / half-ulp = {worst:.3f}")

# %% [markdown]
# The three refined radii sit below the one from the plain majorant sum, and
# the transition from the quadratic-weighted bound to the plain one is visible
# as k grows.

# %%
from bohrradii import radius_r, radius_R, radius_S

print(" k      S_k       R_k       r_k")
for k in K_VALUES[:10]:
    print(f"{k:3d}  {radius_S(k):.6f}  {radius_R(k):.6f}  {radius_r(k):.6f}")

# %% [markdown]
# Closed forms for small cases.

# %%
import math

from bohrradii import fournier_ruscheweyh_radius, radius_rho

print(radius_S(2), 2 - math.sqrt(2))
print(radius_rho(2, 1 / math.sqrt(2)), (math.sqrt(5) - 1) / 2)
print(radius_r(2), math.sqrt((math.sqrt(5) - 1) / 2))
print([fournier_ruscheweyh_radius(g) for g in (0.0, 1 / 3, 0.9)])
