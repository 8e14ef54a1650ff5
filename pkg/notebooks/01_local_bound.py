# %% [markdown]
# # The local bound and its worst-case words
#
# `mubar(a, b)` counts the leaves of a binary tree whose nodes are pairs
# `(a, b)` with `a >= b^2`.  Every node has a decrement child `(a - 2b + 1, b - 1)`;
# the second child is either another decrement or the defect-preserving
# step `(a - b, b)`, whichever gives more leaves.

# %%
from rigidbounds import local_table, mubar
from rigidbounds.words import check_prefix_free, encode_positions, nu_project, worst_case_words

print(mubar(36, 4), mubar(17, 3), mubar(26, 5))

# %% [markdown]
# A slice of the table.  Inadmissible cells print as `*` and the largest
# value of each column is starred twice.

# %%
table = local_table(16, 4)
for b in range(table.b_max + 1):
    row = []
    for a in range(1, table.a_max + 1):
        v = table.value(a, b)
        cell = "*" if v is None else str(v)
        row.append(cell + ("!" if table.column_max[a] == b else " "))
    print(f"b={b}", " ".join(f"{c:>4}" for c in row))

# %% [markdown]
# The explicit tree.  Its leaves are words over A, C0, C1, C2; the number
# of words equals `mubar`, and after merging the C letters no word is a
# prefix of another.

# %%
words = worst_case_words((6, 2))
for w in words:
    gaps, marks = encode_positions(w, (6, 2))
    print(f"{str(w):<14} nu={nu_project(w):<6} gaps={gaps}")
print(len(words) == mubar(6, 2), check_prefix_free(words))
