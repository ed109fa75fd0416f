# %% [markdown]
# # Extremal functions and sharpness
#
# `z^k (a - z)/(1 - a z)` attains equality in each refined inequality at its
# critical radius, and breaks it immediately beyond.

# %%
import numpy as np

from bohrradii import (
    ExtremalFunction,
    Theorem,
    radius_R,
    radius_rho,
    radius_S,
    refined_lhs_extremal_exact,
    sharpness_sweep,
)

k = 3
R = radius_R(k)
ef = ExtremalFunction(k, (1 - R) / (2 * R))
print("quadratic sum from k+1, at R_k:", refined_lhs_extremal_exact(ef, R, k + 1))
print("z^k, quadratic sum from k, at S_k:", refined_lhs_extremal_exact(ExtremalFunction(k, 1.0), radius_S(k), k))
print("a = 2/3, at rho_k(a):", refined_lhs_extremal_exact(ExtremalFunction(k, 2 / 3), radius_rho(k, 2 / 3), k))

# %%
for theorem, a in ((Theorem.TH1, None), (Theorem.TH2, None), (Theorem.TH3, 0.5)):
    print(theorem.value, [f"{lhs:.6f}" for _, lhs in sharpness_sweep(theorem, k, a)])

# %% [markdown]
# rho_k(a) decreases in a and meets S_k at a = 1.

# %%
for a in np.linspace(0.1, 1.0, 10):
    print(f"a = {a:.1f}  rho_3(a) = {radius_rho(3, a):.6f}")
print("S_3 =", radius_S(3))
