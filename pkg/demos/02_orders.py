"""
Orders on small coalitions
==========================

Total orders on the nonempty coalitions of size at most k, and the two
properties that matter: compatibility (stable under adding a common disjoint
set) and ⊆-compatibility (refines inclusion).
"""

# %%
from kcore.orders import (
    SubsetOrder,
    binary_order,
    classify,
    enumerate_orders,
    iter_orders,
    lexicographic_block_order,
)
from kcore.setfn import label

# %%
# The binary order lists coalitions by the integer their bits spell.
b = binary_order(4, 2)
print(b)
print(classify(b))

# %%
# Counting on n = 3, k = 2 (six coalitions, 720 orders).
counts = {f: sum(1 for _ in iter_orders(3, 2, f)) for f in ("all", "compatible", "strongly_compatible")}
print(counts)

# %%
# A non-compatible order comes with a witness (X, Y, C): X ≺ Y but not X∪C ≺ Y∪C.
o = SubsetOrder.from_labels(4, 2, ["1", "3", "2", "12", "23", "13", "4", "14", "24", "34"])
rep = classify(o)
X, Y, C = rep.witness
print("compatible:", rep.compatible, "witness:", label(X), label(Y), label(C))

# %%
# Larger spaces are searched with pruning; a cap is mandatory and truncation is reported.
batch = enumerate_orders(4, 2, "strongly_compatible", cap=50)
print(len(batch), "orders, truncated:", batch.truncated)
print(lexicographic_block_order(4, 2, [4, 3, 2, 1]))
