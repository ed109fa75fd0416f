# %% [markdown]
# # Seeded inequality checks
#
# Random finite Blaschke products times z^k are evaluated at each radius with
# the certified truncation tail added.  A violation would mean a bug.

# %%
from bohrradii import SamplePlan, Theorem
from bohrradii.verify import run_check

for k in (2, 5):
    plan = SamplePlan(k, 300, seed=k)
    for theorem in (Theorem.TH1, Theorem.TH2, Theorem.THB, Theorem.COR1):
        rep = run_check(theorem, plan)
        print(f"k={k} {theorem.value:5s} r={rep.radius_used:.6f} max lhs={rep.max_lhs:.12f} "
              f"violations={rep.violations}")

# %% [markdown]
# Fixed leading modulus: samples built so that |a_k| = a exactly.

# %%
rep = run_check(Theorem.TH3, SamplePlan(2, 300, seed=9), a=0.5)
print(rep)

# %% [markdown]
# The classical inequality on the full class at r = 1/3.

# %%
print(run_check(Theorem.CLASSICAL, SamplePlan(0, 300, seed=1)))
