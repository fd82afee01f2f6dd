"""Exact k-additive cores of cooperative games.

Games are tables over bitmask coalitions (player i is bit i-1) with rational
values; everything is computed with :class:`fractions.Fraction`.
"""

from .achievable import AchievableFamily, FamilyAtlas, achievable_family, build_atlas, top_collection
from .corevert import (
    CoreVariant,
    VertexCertificate,
    core_constraints,
    core_rays,
    find_ray,
    induced_game,
    induced_table,
    order_vertices,
    triangular_solve,
    verify_vertex,
    vertices_n_minus_1,
)
from .errors import (
    DegreeUndefinedError,
    DomainError,
    GuardError,
    InputError,
    InvariantError,
    KcoreError,
    StructureError,
)
from .oracle import PolyhedronSummary, enumerate_vertices, is_feasible
from .orders import SubsetOrder, binary_order, classify, enumerate_orders, is_compatible, is_strongly_compatible
from .setfn import (
    GameTable,
    MobiusVector,
    additivity_degree,
    inverse_mobius,
    is_infinitely_monotone,
    is_k_monotone,
    is_monotone,
    mobius_bounds,
    mobius_transform,
    subset,
    unanimity_game,
)

__version__ = "0.1.0"

__all__ = [
    "AchievableFamily",
    "CoreVariant",
    "DegreeUndefinedError",
    "DomainError",
    "FamilyAtlas",
    "GameTable",
    "GuardError",
    "InputError",
    "InvariantError",
    "KcoreError",
    "MobiusVector",
    "PolyhedronSummary",
    "StructureError",
    "SubsetOrder",
    "VertexCertificate",
    "achievable_family",
    "additivity_degree",
    "binary_order",
    "build_atlas",
    "classify",
    "core_constraints",
    "core_rays",
    "enumerate_orders",
    "enumerate_vertices",
    "find_ray",
    "induced_game",
    "induced_table",
    "inverse_mobius",
    "is_compatible",
    "is_feasible",
    "is_infinitely_monotone",
    "is_k_monotone",
    "is_monotone",
    "is_strongly_compatible",
    "mobius_bounds",
    "mobius_transform",
    "order_vertices",
    "subset",
    "top_collection",
    "triangular_solve",
    "unanimity_game",
    "verify_vertex",
    "vertices_n_minus_1",
]
