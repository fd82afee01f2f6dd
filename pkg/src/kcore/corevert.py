"""k-additive cores: constraint systems, order-induced games and vertex certificates.

Points of a core are k-additive games given by their Möbius coefficients; the
variables of every system are the coalitions of P^k_*(N) in binary order.
"""

from __future__ import annotations

import enum
import warnings
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg, oracle
from .achievable import build_atlas, top_collection
from .errors import DomainError, StructureError
from .orders import SubsetOrder, enumerate_orders, relabelled_binary_key
from .setfn import (
    ZERO,
    GameTable,
    MobiusVector,
    card,
    full_mask,
    inverse_mobius,
    is_k_monotone,
    label,
    mobius_transform,
    submasks,
    subsets_up_to,
)
from .system import ConstraintSystem, Row


class CoreVariant(str, enum.Enum):
    PLAIN = "plain"
    MONOTONE = "monotone"
    INFINITE = "infinite"


def _variant(variant) -> CoreVariant:
    try:
        return CoreVariant(variant)
    except ValueError:
        raise DomainError(f"unknown core variant {variant!r}") from None


def _check_k(n: int, k: int):
    if not 1 <= k <= n:
        raise DomainError(f"k must lie in [1, n={n}], got {k}")


def core_constraints(v: GameTable, k: int, variant="plain") -> ConstraintSystem:
    """Dominance rows for every A ∉ {∅, N}, efficiency at N, plus the variant's extra rows."""
    n = v.n
    _check_k(n, k)
    variant = _variant(variant)
    variables = tuple(subsets_up_to(n, k))
    top = full_mask(n)

    def indicator(pred):
        return tuple(Fraction(1) if pred(K) else ZERO for K in variables)

    rows = []
    for A in range(1, top):
        rows.append(Row(indicator(lambda K: K & ~A == 0), ">=", v[A], ("dominance", A)))
    rows.append(Row(indicator(lambda K: True), "=", v[top], ("efficiency",)))
    if variant is CoreVariant.MONOTONE:
        for L in range(1, top + 1):
            for i in range(n):
                bit = 1 << i
                if L & bit:
                    rows.append(Row(indicator(lambda K: K & bit and K & ~L == 0), ">=", ZERO,
                                    ("monotonicity", i + 1, L)))
    elif variant is CoreVariant.INFINITE:
        for K0 in variables:
            if card(K0) > 1:
                rows.append(Row(indicator(lambda K: K == K0), ">=", ZERO, ("nonneg", K0)))
    return ConstraintSystem(n, k, variables, tuple(rows))


# -- order-induced games ---------------------------------------------------

def induced_game(order: SubsetOrder, v: GameTable) -> MobiusVector:
    """m_≺(B) = Σ_{A ∈ A(B)} m(A) (zero for empty families and outside P^k_*)."""
    if order.n != v.n:
        raise DomainError("order and game live on different ground sets")
    m = mobius_transform(v)
    atlas = build_atlas(order)
    coeffs = {}
    for f in atlas.nonempty():
        coeffs[f.b] = sum((m[A] for A in f.members), ZERO)
    return MobiusVector(v.n, coeffs)


def induced_table(order: SubsetOrder, v: GameTable) -> GameTable:
    return inverse_mobius(induced_game(order, v))


def check_top_equalities(order: SubsetOrder, v: GameTable) -> bool:
    """v_≺(top) = v(top) at every top element of the order's achievable families."""
    vo = induced_table(order, v)
    return all(vo[t] == v[t] for t in top_collection(order))


def dominates(v_star: GameTable, v: GameTable) -> bool:
    """v* ≥ v on every coalition and v*(N) = v(N)."""
    if v_star.n != v.n:
        raise DomainError("games live on different ground sets")
    return v_star.grand == v.grand and all(a >= b for a, b in zip(v_star.values, v.values))


def domination_failures(v_star: GameTable, v: GameTable) -> list:
    return [A for A in range(1, 1 << v.n) if v_star[A] < v[A]]


# -- certification ---------------------------------------------------------

@dataclass
class VertexCertificate:
    point: MobiusVector
    k: int
    variant: CoreVariant
    feasible: bool
    tight_rows: list
    rank: int
    num_vars: int
    violated_rows: list = field(default_factory=list)
    tight_labels: list = field(default_factory=list)
    guaranteed: Optional[bool] = None
    source: Optional[str] = None

    @property
    def is_vertex(self) -> bool:
        return self.feasible and self.rank == self.num_vars

    def vector(self) -> tuple:
        return self.point.vector(self.k)


def verify_vertex(m_star: MobiusVector, v: GameTable, k: int, variant="plain",
                  system: Optional[ConstraintSystem] = None) -> VertexCertificate:
    """Feasibility plus rank of the tight rows, computed exactly."""
    if m_star.n != v.n:
        raise DomainError("point and game live on different ground sets")
    if m_star.max_card() > k:
        raise DomainError(f"point is not {k}-additive (nonzero coefficient above size {k})")
    variant = _variant(variant)
    system = system or core_constraints(v, k, variant)
    x = m_star.vector(k)
    violated = system.violated(x)
    tight = system.tight(x)
    r = linalg.rank([system.rows[i].coeffs for i in tight]) if tight else 0
    return VertexCertificate(
        point=m_star, k=k, variant=variant, feasible=not violated,
        tight_rows=tight, rank=r, num_vars=system.num_vars, violated_rows=violated,
        tight_labels=[system.rows[i].describe() for i in tight],
    )


class CertificateList(list):
    """Certificates plus the enumeration bookkeeping behind them."""

    truncated = False
    orders_seen = 0


def order_vertices(v: GameTable, k: int, require: str = "strong", cap: Optional[int] = None,
                   threads: int = 1) -> list:
    """Distinct points v_≺ over (strongly) compatible orders, each certified.

    Strongly compatible orders are certified against the plain core, merely
    compatible ones against the infinitely monotone core.  Vertexhood is only
    guaranteed for (k+1)-monotone games; otherwise a warning is emitted and
    certificates carry ``guaranteed=False``.
    """
    n = v.n
    _check_k(n, k)
    if require not in ("strong", "compatible"):
        raise DomainError(f"require must be 'strong' or 'compatible', got {require!r}")
    guaranteed = is_k_monotone(v, k + 1)
    if not guaranteed:
        warnings.warn(f"game is not {k + 1}-monotone: order-induced points need not be vertices",
                      stacklevel=2)
    filt = "strongly_compatible" if require == "strong" else "compatible"
    variant = CoreVariant.PLAIN if require == "strong" else CoreVariant.INFINITE
    system = core_constraints(v, k, variant)
    orders = enumerate_orders(n, k, filt, cap)
    seen = {}
    for order in orders:
        point = induced_game(order, v)
        if point.coeffs not in seen:
            seen[point.coeffs] = (point, order)
    points = [p for p, _ in seen.values()]
    if threads > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            certs = list(pool.map(verify_vertex, points, repeat(v), repeat(k), repeat(variant), repeat(system)))
    else:
        certs = [verify_vertex(p, v, k, variant, system) for p in points]
    for cert, (_, order) in zip(certs, seen.values()):
        cert.guaranteed = guaranteed
        cert.source = str(order)
    out = CertificateList(sorted(certs, key=lambda c: c.vector()))
    out.truncated = orders.truncated
    out.orders_seen = len(orders)
    return out


def triangular_solve(order: SubsetOrder, v: GameTable) -> MobiusVector:
    """Solve v*(top(B)) = v(top(B)) over the centres B with nonempty family.

    Unknowns are sorted by the binary order after relabelling players by their
    singleton rank in ``order``; the system must then be lower triangular with
    unit diagonal, which is asserted while substituting forward.
    """
    if order.n != v.n:
        raise DomainError("order and game live on different ground sets")
    atlas = build_atlas(order)
    fams = atlas.nonempty()
    if not atlas.all_lattices:
        raise StructureError("a nonempty achievable family is not a lattice; no triangular system")
    key = relabelled_binary_key(order.singleton_order())
    unknowns = sorted((f.b for f in fams), key=key)
    pos = {b: j for j, b in enumerate(unknowns)}
    solution = {}
    for j, b in enumerate(unknowns):
        top = atlas[b].top
        used = [c for c in submasks(top) if c in pos]
        if any(pos[c] > j for c in used) or b not in used:
            raise StructureError(f"equation for top({label(b)}) = {label(top)} is not triangular")
        rest = sum((solution[c] for c in used if c != b), ZERO)
        solution[b] = v[top] - rest
    return MobiusVector(v.n, solution)


# -- the (n-1)-additive core -----------------------------------------------

def expected_vertex_count_n_minus_1(n: int, top_coeff) -> int:
    if top_coeff == 0:
        return 1
    half = 2 ** (n - 1)
    if top_coeff > 0:
        return half if n % 2 == 0 else half - 1
    return half - 1 if n % 2 == 1 else half - 2


def vertices_n_minus_1(v: GameTable) -> list:
    """All vertices of the (n-1)-additive core, one per admissible proper coalition B₀.

    m(N) > 0: B₀ with |N∖B₀| odd and m*(K) = m(K) + (-1)^|K∖B₀| m(N) for K ⊇ B₀.
    m(N) < 0: B₀ with |N∖B₀| even and the sign of the correction flipped.
    m(N) = 0: v itself.  The formula is applied to K = N as well and the
    cancellation m*(N) = 0 is checked.
    """
    n = v.n
    if n < 2:
        raise DomainError("the (n-1)-additive core needs n >= 2")
    k = n - 1
    top = full_mask(n)
    m = mobius_transform(v)
    mN = m[top]
    system = core_constraints(v, k, CoreVariant.PLAIN)
    if mN == 0:
        cert = verify_vertex(m, v, k, CoreVariant.PLAIN, system)
        cert.source = "v"
        certs = [cert]
    else:
        parity = 1 if mN > 0 else 0
        sign = 1 if mN > 0 else -1
        certs = []
        for B0 in range(1, top):
            if card(top & ~B0) % 2 != parity:
                continue
            coeffs = list(m.coeffs)
            for K in range(1, top + 1):
                if K & B0 == B0:
                    coeffs[K] = m[K] + sign * (-1) ** card(K & ~B0) * mN
            if coeffs[top] != 0:
                raise StructureError(f"coefficient on N did not cancel for B0 = {label(B0)}")
            cert = verify_vertex(MobiusVector(n, coeffs), v, k, CoreVariant.PLAIN, system)
            cert.source = f"B0={label(B0)}"
            certs.append(cert)
    expected = expected_vertex_count_n_minus_1(n, mN)
    if len(certs) != expected:
        raise StructureError(f"expected {expected} vertices, generated {len(certs)}")
    return certs


# -- rays ------------------------------------------------------------------

@dataclass(frozen=True)
class Ray:
    n: int
    k: int
    direction: tuple

    def as_mobius(self) -> MobiusVector:
        return MobiusVector.from_vector(self.n, self.k, self.direction)


def core_rays(v: GameTable, k: int, variant="plain") -> list:
    """Extreme rays of the core's recession cone, normalised, in sorted order."""
    system = core_constraints(v, k, variant)
    return [Ray(v.n, k, d) for d in oracle.cone_rays(system)]


def find_ray(v: GameTable, k: int, variant="plain") -> Optional[Ray]:
    """A ray of the core if it is unbounded, else None.

    Only the homogeneous system enters, so the answer depends on (n, k) alone.
    """
    rays = core_rays(v, k, variant)
    return rays[0] if rays else None
