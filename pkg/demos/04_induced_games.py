"""
Games induced by orders
=======================

Each order pushes the Möbius mass of every coalition onto the centre of the
family containing it.  The result is k-additive, efficient, and equals v on
the top of every family.
"""

# %%
from pathlib import Path

from kcore import io
from kcore.corevert import (
    check_top_equalities,
    dominates,
    domination_failures,
    induced_game,
    induced_table,
    triangular_solve,
)
from kcore.orders import SubsetOrder, iter_orders, order_from_permutation
from kcore.setfn import is_k_monotone, label

DATA = Path(__file__).with_name("data")
v = io.game_from_json((DATA / "reference_game.json").read_text())

# %%
order = SubsetOrder.from_labels(3, 2, ["1", "2", "12", "13", "23", "3"])
m = induced_game(order, v)
print({label(B): str(m[B]) for B in order.sequence})
print("efficient:", m.total() == v.grand, " tops:", check_top_equalities(order, v))

# %%
# With k = 1 the induced game is a marginal vector.
print(induced_game(order_from_permutation([2, 3, 1]), v).vector(1))

# %%
# The same point through the triangular system on the tops.
print("triangular solve agrees:", triangular_solve(order, v) == m)

# %%
# Domination over every compatible order, for a 3-monotone game ...
compatible = list(iter_orders(3, 2, "compatible"))
print(len(compatible), "compatible orders; all dominate:",
      all(dominates(induced_table(o, v), v) for o in compatible))

# %%
# ... and a 2-monotone game that is not 3-monotone, where it fails somewhere.
w = io.game_from_json('{"n": 3, "form": "mobius", "entries": {"1": 1, "2": 1, "3": 1, '
                      '"1,2": 1, "1,3": 1, "2,3": 1, "1,2,3": "-1/2"}}')
print("3-monotone:", is_k_monotone(w, 3))
for o in compatible:
    bad = domination_failures(induced_table(o, w), w)
    if bad:
        print("fails on", [label(A) for A in bad], "for", o)
        break
