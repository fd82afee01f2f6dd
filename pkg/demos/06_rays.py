"""
Unbounded cores
===============

Once k >= 2 the core need not be bounded.  The recession cone is cut out by
the same rows with zero right-hand side, so its rays depend on n and k only.
"""

# %%
from pathlib import Path

from kcore import io
from kcore.corevert import core_constraints, core_rays, find_ray
from kcore.oracle import enumerate_vertices
from kcore.setfn import label, random_game, subsets_up_to

DATA = Path(__file__).with_name("data")
v = io.game_from_json((DATA / "reference_game.json").read_text())
names = [label(m) for m in subsets_up_to(3, 2)]

# %%
for variant in ("plain", "monotone", "infinite"):
    s = enumerate_vertices(core_constraints(v, 2, variant))
    print(f"{variant:>8}: {len(s.vertices)} vertices, {len(s.rays)} rays, bounded {s.bounded}")

# %%
# A ray trades a unit between a pair and one of its members; dominance rows never tighten.
ray = find_ray(v, 2)
print(dict(zip(names, map(str, ray.direction))))

# %%
# Another game, same rays.
other = random_game(4, 3)
print("same ray set:", {r.direction for r in core_rays(v, 2)} == {r.direction for r in core_rays(other, 2)})
print("classical core ray:", find_ray(v, 1))
