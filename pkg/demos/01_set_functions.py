"""
Games, Möbius coefficients and monotonicity
============================================

A game on n players is a table over the 2^n coalitions, indexed by bitmask
(player i is bit i-1).  Everything here is exact.
"""

# %%
from fractions import Fraction
from pathlib import Path

from kcore import io
from kcore.setfn import (
    GameTable,
    is_infinitely_monotone,
    is_k_monotone,
    is_monotone,
    label,
    mobius_bounds,
    mobius_transform,
    random_monotone_game,
    satisfies_mobius_bounds,
)

DATA = Path(__file__).with_name("data")

# %%
# Load a game given by its Möbius coefficients; decimals are read exactly.
v = io.game_from_json((DATA / "reference_game.json").read_text())
m = mobius_transform(v)
for A in range(1, 1 << v.n):
    print(f"{label(A):>4}  v = {str(v[A]):>5}   m = {m[A]}")

# %%
# Nonnegative Möbius mass everywhere: monotone, k-monotone for every k.
print("monotone", is_monotone(v), "2-monotone", is_k_monotone(v, 2),
      "infinitely monotone", is_infinitely_monotone(v), "degree", m.degree())

# %%
# Three-player majority: monotone but not convex, and m(123) = -2.
maj = GameTable(3, {0b011: 1, 0b101: 1, 0b110: 1, 0b111: 1})
print("majority m(123) =", mobius_transform(maj)[0b111], "convex:", is_k_monotone(maj, 2))

# %%
# Möbius bounds for a normalised monotone game, by coalition size.
for a in range(1, 7):
    b = mobius_bounds(a, 1)
    print(f"|A| = {a}: {b.lower} <= m(A) <= {b.upper}")

# %%
# Random monotone games sit inside those bounds.
ok = sum(satisfies_mobius_bounds(random_monotone_game(seed, 4)) for seed in range(200))
print(f"{ok}/200 random monotone games within bounds")
print("exact arithmetic:", Fraction(1, 10) + Fraction(2, 10) == Fraction(3, 10))
