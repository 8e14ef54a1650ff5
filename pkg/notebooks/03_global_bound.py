# %% [markdown]
# # The global bound over defect profiles
#
# A profile lists the rank defects at several points.  Its cost `phi(b) + r`
# must fit into the codimension budget `a`; its score adds up the local bounds.

# %%
from rigidbounds import mubar_total, phi
from rigidbounds.golden import load_golden

printed = load_golden().global_rows
for a in range(1, 21):
    row = mubar_total(a)
    value, profile = printed[a]
    flag = "" if row.value == value else f"   printed {value} ({profile})"
    print(f"{a:>2} {row.value:>5}  {row.maximizers[0]}{flag}")

# %% [markdown]
# Two rows disagree with the printed reference.  At a = 4 the printed profile
# does not fit the budget.  At a = 15 six points of defect 2 fit exactly:

# %%
print(phi((2,) * 6) + 6, mubar_total(15).value)
