"""
Achievable families
===================

For an order ≺ and a centre B, A(B) collects the supersets of B whose small
subsets all come no later than B.  The nonempty families always partition the
nonempty coalitions; compatibility makes each one a Boolean interval [B, top].
"""

# %%
from pathlib import Path

from kcore import io
from kcore.achievable import build_atlas, check_interval_property, top_collection
from kcore.orders import classify
from kcore.setfn import label

DATA = Path(__file__).with_name("data")


def show(name):
    order = io.order_from_json((DATA / name).read_text())
    atlas = build_atlas(order)
    print(order, "|", classify(order))
    for b in order.sequence:
        f = atlas[b]
        members = ", ".join(label(A) for A in f.sorted_members()) or "∅"
        print(f"   A({label(b)}) = {{{members}}}  {f.status}")
    print("   partition:", atlas.partition_ok, " intervals:", check_interval_property(atlas))
    return atlas


# %%
# Compatible but not ⊆-compatible: two centres have empty families.
show("order_n3_example.json")

# %%
# Neither property: A(23) = {23, 123, 234} has no top.
show("order_n4_nonlattice.json")

# %%
# ⊆-compatible only: still a non-lattice family.
show("order_n4_subset_nonlattice.json")

# %%
# Not compatible, yet every family is a lattice.
atlas = show("order_n4_lattice.json")
print("tops:", [label(t) for t in sorted(top_collection(atlas))])
