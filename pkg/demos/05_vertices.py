"""
Vertices of k-additive cores
============================

Three generators of vertices, each certified exactly (feasible, tight rows of
full rank): compatible orders, the closed form for k = n-1, and brute force.
"""

# %%
from pathlib import Path

from kcore import io
from kcore.corevert import core_constraints, order_vertices, vertices_n_minus_1
from kcore.oracle import enumerate_vertices
from kcore.setfn import MobiusVector, inverse_mobius, random_totally_monotone_game

DATA = Path(__file__).with_name("data")
v = io.game_from_json((DATA / "reference_game.json").read_text())

# %%
# Strongly compatible orders on n = 3, k = 2 give at most 3 distinct vertices.
for cert in order_vertices(v, 2):
    print(cert.source, "->", [str(x) for x in cert.vector()], "rank", cert.rank, "vertex", cert.is_vertex)

# %%
# The k = n-1 formula, compared with the brute-force enumeration.
theorem = {c.vector() for c in vertices_n_minus_1(v)}
oracle = enumerate_vertices(core_constraints(v, 2)).vertex_set()
print(len(theorem), "vertices; same as oracle:", theorem == oracle)

# %%
# All three signs of the top coefficient on n = 4.
base = random_totally_monotone_game(1, 4, 3).mobius()
for top in ("1/3", "0", "-1/3"):
    coeffs = list(base.coeffs)
    coeffs[15] = top
    g = inverse_mobius(MobiusVector(4, coeffs))
    certs = vertices_n_minus_1(g)
    same = {c.vector() for c in certs} == enumerate_vertices(core_constraints(g, 3)).vertex_set()
    print(f"m(N) = {top:>5}: {len(certs)} vertices, matches oracle: {same}")

# %%
# k = 1: the marginal vectors are exactly the vertices of the classical core of a convex game.
g = random_totally_monotone_game(7, 4, 4)
phi = {c.vector() for c in order_vertices(g, 1)}
print(len(phi), "marginal vectors; equal to oracle:", phi == enumerate_vertices(core_constraints(g, 1)).vertex_set())
