"""Achievable families A(B) of an order on P^k_*(N) and their structure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from .errors import DomainError, InvariantError, StructureError
from .orders import SubsetOrder
from .setfn import card, elements, interval, label, submasks, supersets


@dataclass(frozen=True)
class AchievableFamily:
    """A(B) = {A ⊇ B : every K ⊆ A in P^k_*(N) has K ≼ B}.

    ``status`` is ``"empty"``, ``"lattice"`` (a Boolean interval [B, top]) or
    ``"non-lattice"``.
    """

    b: int
    members: frozenset
    top: Optional[int]
    status: str

    @property
    def empty(self) -> bool:
        return self.status == "empty"

    @property
    def is_lattice(self) -> bool:
        return self.status == "lattice"

    def sorted_members(self) -> list:
        return sorted(self.members)

    def as_record(self) -> dict:
        return {
            "center": label(self.b),
            "members": [label(m) for m in self.sorted_members()],
            "top": None if self.top is None else label(self.top),
            "lattice": self.is_lattice,
            "empty": self.empty,
        }


def _admissible(order: SubsetOrder, A: int, bound: int) -> bool:
    rank, k = order.rank, order.k
    for K in submasks(A):
        if K and card(K) <= k and rank[K] > bound:
            return False
    return True


def achievable_family(order: SubsetOrder, b: int) -> AchievableFamily:
    if b not in order:
        raise DomainError(f"{label(b)} is not in P^{order.k}_*(N)")
    bound = order.rank[b]
    members = frozenset(A for A in supersets(b, order.n) if _admissible(order, A, bound))
    if not members:
        return AchievableFamily(b, members, None, "empty")
    union = 0
    for A in members:
        union |= A
    if union in members:
        if len(members) != 1 << card(union & ~b):
            raise InvariantError(f"A({label(b)}) has a top but is not the full interval")
        return AchievableFamily(b, members, union, "lattice")
    return AchievableFamily(b, members, None, "non-lattice")


@dataclass(frozen=True)
class FamilyAtlas:
    order: SubsetOrder
    families: Dict[int, AchievableFamily]
    partition_ok: bool

    def __getitem__(self, b: int) -> AchievableFamily:
        return self.families[b]

    def nonempty(self) -> list:
        return [f for f in self.families.values() if not f.empty]

    @property
    def all_lattices(self) -> bool:
        return all(f.is_lattice for f in self.nonempty())

    def owner(self, A: int) -> int:
        """The unique B with A ∈ A(B)."""
        for f in self.families.values():
            if A in f.members:
                return f.b
        raise InvariantError(f"{label(A)} lies in no achievable family")

    def records(self) -> list:
        return [self.families[b].as_record() for b in self.order.sequence]


def partition_violations(order: SubsetOrder, families) -> list:
    """Nonempty subsets covered zero or several times by the families."""
    seen = {}
    for f in families.values():
        for A in f.members:
            seen[A] = seen.get(A, 0) + 1
    return [A for A in range(1, 1 << order.n) if seen.get(A, 0) != 1]


def build_atlas(order: SubsetOrder, strict: bool = True) -> FamilyAtlas:
    """All achievable families; with ``strict`` a failed partition raises InvariantError."""
    families = {b: achievable_family(order, b) for b in order.sequence}
    bad = partition_violations(order, families)
    if bad and strict:
        raise InvariantError(f"achievable families do not partition P(N)\\∅: {[label(a) for a in bad]}")
    return FamilyAtlas(order, families, not bad)


def check_interval_property(atlas: FamilyAtlas) -> bool:
    """Every nonempty family is the whole Boolean interval [B, top]."""
    for f in atlas.nonempty():
        if not f.is_lattice or f.members != frozenset(interval(f.b, f.top)):
            return False
    return True


def top_collection(order_or_atlas) -> frozenset:
    atlas = order_or_atlas if isinstance(order_or_atlas, FamilyAtlas) else build_atlas(order_or_atlas)
    tops = set()
    for f in atlas.nonempty():
        if not f.is_lattice:
            raise StructureError(f"A({label(f.b)}) is not a lattice, so it has no top element")
        tops.add(f.top)
    return frozenset(tops)


def expected_top_collection(n: int, k: int, perm=None) -> frozenset:
    """Closed-form top collection of a strongly compatible order whose singletons
    are ranked ``perm[0] ≺ perm[1] ≺ ...`` (identity by default)."""
    perm = list(perm) if perm is not None else list(range(1, n + 1))
    bit = {j + 1: 1 << (p - 1) for j, p in enumerate(perm)}  # relabelled j -> real mask bit
    out = {m for m in range(1, 1 << n) if card(m) < k}
    for l in range(1, n - k + 2):
        prefix = 0
        for j in range(1, l + 1):
            prefix |= bit[j]
        rest = 0
        for j in range(l + 1, n + 1):
            rest |= bit[j]
        for J in submasks(rest):
            if card(J) == k - 1:
                out.add(prefix | J)
    return frozenset(out)


def check_suffix_property(order: SubsetOrder, family: AchievableFamily) -> bool:
    """B is a ≺-suffix of its top: listing top's players by singleton rank, B is the tail."""
    if family.empty or not family.is_lattice:
        raise StructureError("suffix property needs a nonempty lattice family")
    rank = order.rank
    chain = sorted(elements(family.top), key=lambda i: rank[1 << (i - 1)])
    size = card(family.b)
    tail = 0
    for i in chain[len(chain) - size:]:
        tail |= 1 << (i - 1)
    return tail == family.b


def sub_partition_ok(atlas: FamilyAtlas, family: AchievableFamily) -> bool:
    """Families of centres inside top(B) partition P(top(B)) \\ ∅."""
    top = family.top
    covered = []
    for f in atlas.nonempty():
        if f.b & ~top == 0:
            covered.extend(f.members)
    return sorted(covered) == [A for A in range(1, 1 << atlas.order.n) if A & ~top == 0]

