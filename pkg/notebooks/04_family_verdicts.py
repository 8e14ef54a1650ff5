# %% [markdown]
# # Verdicts for complete intersections of quadrics and cubics
#
# For `k1` quadrics and `k2` cubics the numeric step compares the global bound
# at `M = k1 + 2 k2` with the threshold `2^(k1+k2-4) 3^(k2-1)`.

# %%
from rigidbounds import check_family, hypertangent_ledger
from rigidbounds.rigidity import sweep_families

for f in [(5, 3), (7, 2), (6, 2), (0, 5), (4, 1)]:
    v = check_family(f)
    print(f, v.status.value, v.margin)

# %%
verdicts = sweep_families(10, 13)
print(sorted(f for f, v in verdicts.items() if v.status.established and v.family.M <= 11))

# %% [markdown]
# The multiplicity ledger ends at the same coefficient for every family.

# %%
r = hypertangent_ledger((5, 3))
print(r.post_hypertangent_ratio, r.final_coefficient, 8 / r.d == float(r.final_coefficient))
print(r.notes[0])
