# %% [markdown]
# # Coefficient series and truncation tails

# %%
import numpy as np

from bohrradii import BlaschkeSample, blaschke_coefficients, bohr_sum
from bohrradii.series import order_for_tail

s = BlaschkeSample(2, (0.5, -0.3 + 0.6j, 0.9j), rotation=1.0)
cs = blaschke_coefficients(s, 40)
print(np.round(cs.moduli[:8], 6))

# %% [markdown]
# The tail bound `r^(N+1)/(1-r)` only uses |a_n| <= 1, so near the boundary a
# longer prefix is needed.  `order_for_tail` picks the prefix length.

# %%
for r in (0.5, 0.8, 0.95):
    n = order_for_tail(2, r, 1e-15)
    fv = bohr_sum(blaschke_coefficients(s, n), r)
    print(f"r={r}: N={n}, value={fv.value:.15f}, tail<={fv.tail_bound:.1e}")

# %% [markdown]
# Coefficients of the inner factor obey |b_n| <= 1 - |b_0|^2.

# %%
b = blaschke_coefficients(s.inner(), 60).moduli
print(b[1:].max(), "<=", 1 - b[0] ** 2)
