"""Strict total orders on P^k_*(N) and their compatibility properties."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from . import _guard
from .errors import DomainError
from .setfn import card, check_n, full_mask, label, parse_label, submasks, subsets_up_to

FILTERS = ("all", "compatible", "strongly_compatible")

# beyond this many subsets, plain permutation enumeration is refused
FULL_ENUMERATION_LIMIT = 7


@dataclass(frozen=True)
class SubsetOrder:
    """A strict total order on P^k_*(N), stored as its increasing sequence.

    ``rank`` is a dense array indexed by mask (``-1`` outside P^k_*(N)).
    """

    n: int
    k: int
    sequence: tuple
    rank: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        check_n(self.n)
        if not 1 <= self.k <= self.n:
            raise DomainError(f"k must lie in [1, n={self.n}], got {self.k}")
        seq = tuple(self.sequence)
        expected = subsets_up_to(self.n, self.k)
        if sorted(seq) != expected:
            raise DomainError(f"sequence is not a permutation of P^{self.k}_*(N) for n={self.n}")
        rank = [-1] * (1 << self.n)
        for pos, mask in enumerate(seq):
            rank[mask] = pos
        object.__setattr__(self, "sequence", seq)
        object.__setattr__(self, "rank", tuple(rank))

    @classmethod
    def from_labels(cls, n: int, k: int, labels: Sequence[str]) -> "SubsetOrder":
        return cls(n, k, tuple(parse_label(s) for s in labels))

    def __len__(self):
        return len(self.sequence)

    def __contains__(self, mask):
        return 0 <= mask < len(self.rank) and self.rank[mask] >= 0

    def precedes(self, a: int, b: int) -> bool:
        return self.rank[a] < self.rank[b]

    def labels(self) -> list:
        return [label(m) for m in self.sequence]

    def singleton_order(self) -> tuple:
        """Players listed in ≺-increasing order of their singletons."""
        return tuple(m.bit_length() for m in self.sequence if card(m) == 1)

    def __str__(self):
        return " ≺ ".join(self.labels())


@dataclass(frozen=True)
class CompatibilityReport:
    subset_compatible: bool
    compatible: bool
    witness: Optional[tuple] = None
    subset_witness: Optional[tuple] = None

    @property
    def strongly_compatible(self) -> bool:
        return self.compatible and self.subset_compatible


@lru_cache(maxsize=None)
def _translation_pairs(n: int, k: int) -> tuple:
    """All (A, B, A∪C, B∪C) with A < B (as masks), C ≠ ∅ disjoint from both, results in P^k_*."""
    members = subsets_up_to(n, k)
    top = full_mask(n)
    out = []
    for a_idx, A in enumerate(members):
        for B in members[a_idx + 1:]:
            for C in submasks(top & ~(A | B)):
                if C and card(A | C) <= k and card(B | C) <= k:
                    out.append((A, B, A | C, B | C))
    return tuple(out)


def classify(order: SubsetOrder) -> CompatibilityReport:
    """Check compatibility (the translation "iff" in both directions) and ⊆-compatibility.

    Witnesses: ``(X, Y, C)`` with X ≺ Y but X∪C ≻ Y∪C for compatibility;
    ``(X, Y)`` with X ⊂ Y but Y ≺ X for ⊆-compatibility.
    """
    r = order.rank
    witness = None
    for A, B, AC, BC in _translation_pairs(order.n, order.k):
        if (r[A] < r[B]) != (r[AC] < r[BC]):
            X, Y = (A, B) if r[A] < r[B] else (B, A)
            witness = (X, Y, AC & ~A)
            break
    subset_witness = None
    for Y in order.sequence:
        for X in submasks(Y):
            if X and X != Y and r[Y] < r[X]:
                subset_witness = (X, Y)
                break
        if subset_witness:
            break
    return CompatibilityReport(
        subset_compatible=subset_witness is None,
        compatible=witness is None,
        witness=witness,
        subset_witness=subset_witness,
    )


def is_compatible(order: SubsetOrder) -> bool:
    return classify(order).compatible


def is_strongly_compatible(order: SubsetOrder) -> bool:
    return classify(order).strongly_compatible


# -- constructions ---------------------------------------------------------

def binary_order(n: int, k: int) -> SubsetOrder:
    """Order by η(A) = Σ_{i∈A} 2^(i-1), i.e. by the mask value itself."""
    return SubsetOrder(n, k, tuple(subsets_up_to(n, k)))


def _check_perm(perm: Sequence[int], n: Optional[int] = None) -> tuple:
    perm = tuple(perm)
    size = len(perm) if n is None else n
    if sorted(perm) != list(range(1, size + 1)):
        raise DomainError(f"{perm!r} is not a permutation of 1..{size}")
    return perm


def order_from_permutation(perm: Sequence[int]) -> SubsetOrder:
    """The order σ(1) ≺ σ(2) ≺ ... ≺ σ(n) on singletons (k = 1)."""
    perm = _check_perm(perm)
    return SubsetOrder(len(perm), 1, tuple(1 << (i - 1) for i in perm))


def relabelled_binary_key(perm: Sequence[int]):
    """Key for the binary order after renaming perm[j] to j+1."""
    weight = {p: 1 << j for j, p in enumerate(perm)}

    def key(mask):
        return sum(weight[i] for i in range(1, len(perm) + 1) if mask >> (i - 1) & 1)

    return key


def _block_key(perm):
    pos = {p: j for j, p in enumerate(perm)}

    def key(mask):
        members = sorted(pos[i] for i in range(1, len(perm) + 1) if mask >> (i - 1) & 1)
        return (len(members), members)

    return key


def lexicographic_block_order(n: int, k: int, base_perm: Optional[Sequence[int]] = None) -> SubsetOrder:
    """Increasing cardinality, ties broken lexicographically w.r.t. ``base_perm``."""
    perm = _check_perm(base_perm if base_perm is not None else range(1, n + 1), n)
    return SubsetOrder(n, k, tuple(sorted(subsets_up_to(n, k), key=_block_key(perm))))


def necessity_order(n: int, k: int, K: int, L: int) -> SubsetOrder:
    """Order used to expose a negative interval sum over [K, L] as a domination failure.

    Players are relabelled so that L \\ K comes first, then K, then N \\ L.  With
    ``i`` the first player of K and ``B = K \\ {i}``, the order lists P^k_*(L) by
    cardinality then lexicographically, with B moved to the end; every nonempty
    D ⊆ N \\ L (in relabelled binary order) then contributes the block
    D, D∪S for S along that sequence, dropping sets larger than k.
    """
    check_n(n)
    if K & ~L or L >> n:
        raise DomainError("need K ⊆ L ⊆ N")
    if not 2 <= card(K) <= k + 1:
        raise DomainError(f"need 2 <= |K| <= k+1, got |K| = {card(K)} with k = {k}")
    players = range(1, n + 1)
    inside = lambda S: [p for p in players if S >> (p - 1) & 1]
    perm = inside(L & ~K) + inside(K) + inside(full_mask(n) & ~L)
    i = inside(K)[0]
    B = K & ~(1 << (i - 1))

    head = sorted((m for m in subsets_up_to(n, k) if m & ~L == 0 and m != B), key=_block_key(perm))
    head.append(B)
    seq = list(head)
    outside = full_mask(n) & ~L
    for D in sorted((d for d in submasks(outside) if d), key=relabelled_binary_key(perm)):
        for S in [0] + head:
            if card(S | D) <= k:
                seq.append(S | D)
    return SubsetOrder(n, k, tuple(seq))


# -- enumeration -----------------------------------------------------------

@dataclass
class OrderEnumeration:
    orders: list
    truncated: bool
    filter: str

    def __len__(self):
        return len(self.orders)

    def __iter__(self):
        return iter(self.orders)


def _keep(order: SubsetOrder, filt: str) -> bool:
    if filt == "all":
        return True
    report = classify(order)
    return report.compatible if filt == "compatible" else report.strongly_compatible


def _backtrack(n: int, k: int, filt: str) -> Iterator[SubsetOrder]:
    members = subsets_up_to(n, k)
    size = len(members)
    rank = [-1] * (1 << n)
    involving = {m: [] for m in members}
    if filt != "all":
        for c in _translation_pairs(n, k):
            for m in set(c):
                involving[m].append(c)
    proper_subsets = {m: [s for s in submasks(m) if s and s != m] for m in members}
    seq = []

    def rel(a, b):
        ra, rb = rank[a], rank[b]
        if ra < 0 and rb < 0:
            return None
        if ra < 0:
            return False
        if rb < 0:
            return True
        return ra < rb

    def consistent(x):
        for A, B, AC, BC in involving[x]:
            left, right = rel(A, B), rel(AC, BC)
            if left is not None and right is not None and left != right:
                return False
        return True

    def extend():
        if len(seq) == size:
            yield SubsetOrder(n, k, tuple(seq))
            return
        for x in members:
            if rank[x] >= 0:
                continue
            if filt == "strongly_compatible" and any(rank[s] < 0 for s in proper_subsets[x]):
                continue
            rank[x] = len(seq)
            seq.append(x)
            if consistent(x):
                yield from extend()
            seq.pop()
            rank[x] = -1

    yield from extend()


def iter_orders(n: int, k: int, filt: str = "all") -> Iterator[SubsetOrder]:
    """Stream qualifying orders in lexicographic order of their sequences
    (positions taken in binary order).  Small cases enumerate all permutations;
    larger ones backtrack with compatibility pruning."""
    check_n(n)
    if filt not in FILTERS:
        raise DomainError(f"filter must be one of {FILTERS}, got {filt!r}")
    if not 1 <= k <= n:
        raise DomainError(f"k must lie in [1, n={n}], got {k}")
    members = subsets_up_to(n, k)
    if len(members) <= FULL_ENUMERATION_LIMIT:
        for seq in itertools.permutations(members):
            order = SubsetOrder(n, k, seq)
            if _keep(order, filt):
                yield order
    else:
        yield from _backtrack(n, k, filt)


def enumerate_orders(n: int, k: int, filt: str = "all", cap: Optional[int] = None) -> OrderEnumeration:
    """Collect qualifying orders; ``cap`` truncates (flagged, not an error).

    A cap is mandatory once |P^k_*(N)| exceeds the full-enumeration limit.
    """
    size = len(subsets_up_to(check_n(n), k))
    if cap is None:
        if size > FULL_ENUMERATION_LIMIT:
            _guard.check(f"enumerating orders on P^{k}_*(N), n={n} without a cap", size, FULL_ENUMERATION_LIMIT)
    elif cap < 0:
        raise DomainError("cap must be nonnegative")
    _guard.check(f"order search for n={n}", n, 6)
    stream = iter_orders(n, k, filt)
    if cap is None:
        return OrderEnumeration(list(stream), False, filt)
    orders = list(itertools.islice(stream, cap))
    truncated = next(stream, None) is not None
    return OrderEnumeration(orders, truncated, filt)
