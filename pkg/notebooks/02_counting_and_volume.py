# %% [markdown]
# # Counting gap vectors
#
# The gap vector of a word sits in the integer simplex
# `b*x1 + (b-1)*x2 + ... + xb <= a - b^2`.  Its lattice points are bounded by
# the volume of a slightly larger rational simplex, and that volume times `2^b`
# is in turn below a smooth majorant `u_b`.

# %%
from rigidbounds.analytic import stirling_bound, u_bound, u_argmax
from rigidbounds.polytope import lattice_count, volume_plus

for a, b in [(16, 2), (30, 3), (64, 5), (120, 8)]:
    print(a, b, lattice_count(a, b), volume_plus(a, b), float(stirling_bound(a, b)), round(u_bound(a, b), 1))

# %% [markdown]
# The index maximizing `u_b` grows like the square root of `a`.  For a = 19
# and a = 20 it is 3, where `2a - b(b-1) > 5a/3`.

# %%
for a in (17, 18, 19, 20, 21, 50, 100, 400):
    b = u_argmax(a)
    print(a, b, 3 * (2 * a - b * (b - 1)) <= 5 * a)
