"""Subsets, games and Möbius transforms on a finite ground set N = {1..n}.

Coalitions are integer bitmasks: element ``i`` of N maps to bit ``i - 1``.
All values are :class:`fractions.Fraction`; nothing here ever touches floats.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Iterator, Mapping, Optional

from .errors import DegreeUndefinedError, DomainError

MAX_N = 24

ZERO = Fraction(0)


# -- subsets ---------------------------------------------------------------

def check_n(n: int) -> int:
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise DomainError(f"ground set size must be an integer in [1, {MAX_N}], got {n!r}")
    return n


def full_mask(n: int) -> int:
    return (1 << n) - 1


def subset(*elements: int) -> int:
    """Mask of the coalition holding the given 1-based players."""
    mask = 0
    for i in elements:
        if i < 1:
            raise DomainError(f"players are numbered from 1, got {i}")
        mask |= 1 << (i - 1)
    return mask


def elements(mask: int) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def card(mask: int) -> int:
    return mask.bit_count()


def label(mask: int) -> str:
    """Compact name used in the literature: ``{1,3}`` -> ``"13"``; ``"∅"`` for 0.

    Falls back to comma separation when a player index has two digits.
    """
    if mask == 0:
        return "∅"
    items = elements(mask)
    if items[-1] > 9:
        return ",".join(map(str, items))
    return "".join(map(str, items))


def parse_label(text: str) -> int:
    """Inverse of :func:`label`; also accepts comma-separated lists."""
    text = text.strip()
    if text in ("", "∅", "{}"):
        return 0
    if "," in text:
        parts = [p for p in text.split(",") if p.strip()]
        return subset(*(int(p) for p in parts))
    return subset(*(int(c) for c in text))


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def supersets(mask: int, n: int) -> Iterator[int]:
    """All supersets of ``mask`` inside N, in increasing mask order."""
    rest = full_mask(n) & ~mask
    for extra in sorted(submasks(rest)):
        yield mask | extra


def subsets_up_to(n: int, k: int) -> list:
    """P^k_*(N): nonempty coalitions of at most k players, in binary order."""
    return [m for m in range(1, 1 << n) if card(m) <= k]


def num_vars(n: int, k: int) -> int:
    """C(n,1) + ... + C(n,k)."""
    return sum(comb(n, j) for j in range(1, min(k, n) + 1))


def interval(lo: int, hi: int) -> Iterator[int]:
    """The Boolean interval [lo, hi] = {L : lo ⊆ L ⊆ hi}."""
    if lo & ~hi:
        return
    for extra in submasks(hi & ~lo):
        yield lo | extra


def as_fraction(value) -> Fraction:
    """Exact conversion; strings such as ``"0.1"`` or ``"1/5"`` are parsed exactly."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # repr round-trips, so "0.1" is recovered rather than the binary expansion
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


# -- set functions ---------------------------------------------------------

def _dense(n: int, data, what: str) -> tuple:
    size = 1 << n
    if isinstance(data, Mapping):
        values = [ZERO] * size
        for mask, x in data.items():
            if not 0 <= mask < size:
                raise DomainError(f"{what}: mask {mask} has bits outside N (n={n})")
            values[mask] = as_fraction(x)
        return tuple(values)
    values = tuple(as_fraction(x) for x in data)
    if len(values) != size:
        raise DomainError(f"{what}: expected {size} values for n={n}, got {len(values)}")
    return values


@dataclass(frozen=True)
class GameTable:
    """A game v: 2^N -> Q with v(∅) = 0, stored densely by mask."""

    n: int
    values: tuple

    def __post_init__(self):
        check_n(self.n)
        object.__setattr__(self, "values", _dense(self.n, self.values, "game"))
        if self.values[0] != 0:
            raise DomainError(f"a game must vanish on the empty set, got v(∅) = {self.values[0]}")

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int], object]) -> "GameTable":
        return cls(n, [0] + [fn(mask) for mask in range(1, 1 << n)])

    def __getitem__(self, mask: int) -> Fraction:
        return self.values[mask]

    @property
    def grand(self) -> Fraction:
        return self.values[-1]

    def mobius(self) -> "MobiusVector":
        return mobius_transform(self)

    def items(self) -> Iterator:
        return ((mask, self.values[mask]) for mask in range(1, 1 << self.n))


@dataclass(frozen=True)
class MobiusVector:
    """Möbius coefficients m(A) of a game; ``coeffs[0]`` is always 0."""

    n: int
    coeffs: tuple

    def __post_init__(self):
        check_n(self.n)
        object.__setattr__(self, "coeffs", _dense(self.n, self.coeffs, "mobius"))
        if self.coeffs[0] != 0:
            raise DomainError("the Möbius coefficient of the empty set must be 0")

    @classmethod
    def from_vector(cls, n: int, k: int, vector: Iterable) -> "MobiusVector":
        """Build from components listed over P^k_*(N) in binary order."""
        masks = subsets_up_to(n, k)
        vector = list(vector)
        if len(vector) != len(masks):
            raise DomainError(f"expected {len(masks)} components for n={n}, k={k}, got {len(vector)}")
        return cls(n, dict(zip(masks, vector)))

    def __getitem__(self, mask: int) -> Fraction:
        return self.coeffs[mask]

    def vector(self, k: int) -> tuple:
        """Components over P^k_*(N) in binary order (the variable order of core systems)."""
        return tuple(self.coeffs[m] for m in subsets_up_to(self.n, k))

    def degree(self) -> int:
        return additivity_degree(self)

    def max_card(self) -> int:
        """Largest |A| with m(A) != 0, or 0 for the zero vector."""
        return max((card(m) for m in range(1, 1 << self.n) if self.coeffs[m] != 0), default=0)

    def truncate(self, k: int) -> "MobiusVector":
        return MobiusVector(self.n, [c if card(m) <= k else ZERO for m, c in enumerate(self.coeffs)])

    def game(self) -> GameTable:
        return inverse_mobius(self)

    def total(self) -> Fraction:
        return sum(self.coeffs, ZERO)


def mobius_transform(v: GameTable) -> MobiusVector:
    """m(A) = sum over B ⊆ A of (-1)^|A\\B| v(B), via the in-place subset-difference recursion."""
    m = list(v.values)
    for i in range(v.n):
        bit = 1 << i
        for mask in range(1 << v.n):
            if mask & bit:
                m[mask] -= m[mask ^ bit]
    return MobiusVector(v.n, m)


def inverse_mobius(m: MobiusVector) -> GameTable:
    """v(A) = sum over B ⊆ A of m(B)."""
    v = list(m.coeffs)
    for i in range(m.n):
        bit = 1 << i
        for mask in range(1 << m.n):
            if mask & bit:
                v[mask] += v[mask ^ bit]
    return GameTable(m.n, v)


def unanimity_game(n: int, A: int) -> GameTable:
    """u_A(B) = 1 iff B ⊇ A."""
    check_n(n)
    if A == 0:
        raise DomainError("unanimity game needs a nonempty centre")
    if A >> n:
        raise DomainError(f"centre {A} has bits outside N (n={n})")
    return GameTable.from_function(n, lambda B: 1 if B & A == A else 0)


# -- classifiers -----------------------------------------------------------

def interval_sum(m: MobiusVector, lo: int, hi: int) -> Fraction:
    return sum((m[L] for L in interval(lo, hi)), ZERO)


def is_monotone(v: GameTable) -> bool:
    """Monotonicity through the Möbius condition: every interval [i, B] has a nonnegative sum."""
    m = mobius_transform(v)
    for B in range(1, 1 << v.n):
        for i in elements(B):
            if interval_sum(m, 1 << (i - 1), B) < 0:
                return False
    return True


def is_monotone_direct(v: GameTable) -> bool:
    """v(A) <= v(B) whenever A ⊆ B, checked pair by pair."""
    for B in range(1 << v.n):
        for A in submasks(B):
            if v[A] > v[B]:
                return False
    return True


def is_k_monotone(v: GameTable, k: int) -> bool:
    """Every interval [A, B] with 2 <= |A| <= k has a nonnegative Möbius sum.

    ``k`` larger than n is accepted and behaves like ``k = n``.
    """
    if k < 2:
        raise DomainError(f"k-monotonicity is defined for k >= 2, got {k}")
    m = mobius_transform(v)
    for A in range(1, 1 << v.n):
        if not 2 <= card(A) <= k:
            continue
        for B in supersets(A, v.n):
            if interval_sum(m, A, B) < 0:
                return False
    return True


def is_infinitely_monotone(v: GameTable) -> bool:
    return v.n < 2 or is_k_monotone(v, v.n)


def is_additive(v: GameTable) -> bool:
    m = mobius_transform(v)
    return all(m[A] == 0 for A in range(1, 1 << v.n) if card(A) > 1)


def additivity_degree(m: MobiusVector) -> int:
    deg = m.max_card()
    if deg == 0:
        raise DegreeUndefinedError("the zero game has no additivity degree")
    return deg


# -- Möbius bounds for monotone games --------------------------------------

def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


@dataclass(frozen=True)
class MobiusBound:
    """Bounds -C(a-1, l')·v(N) <= m(A) <= C(a-1, l)·v(N) for |A| = a.

    ``l_alt`` / ``l_prime_alt`` hold the second admissible choice for the residues
    where two are available; the binomial magnitude is the same for both.
    """

    a: int
    lower: Fraction
    upper: Fraction
    l: int
    l_prime: int
    l_alt: Optional[int] = None
    l_prime_alt: Optional[int] = None

    def contains(self, value) -> bool:
        return self.lower <= value <= self.upper


def mobius_bounds(a: int, vN) -> MobiusBound:
    if not isinstance(a, int) or a < 1:
        raise DomainError(f"cardinality must be a positive integer, got {a!r}")
    vN = as_fraction(vN)
    l_alt = lp_alt = None
    r = a % 4
    if r == 0:
        l, lp = a // 2, a // 2 - 1
    elif r == 1:
        l, lp, lp_alt = (a - 1) // 2, (a - 3) // 2, (a + 1) // 2
    elif r == 2:
        l, lp = a // 2 - 1, a // 2
    else:
        l, l_alt, lp = (a - 3) // 2, (a + 1) // 2, (a - 1) // 2
    return MobiusBound(
        a=a,
        lower=-_binom(a - 1, lp) * vN,
        upper=_binom(a - 1, l) * vN,
        l=l,
        l_prime=lp,
        l_alt=l_alt,
        l_prime_alt=lp_alt,
    )


def satisfies_mobius_bounds(v: GameTable) -> bool:
    m = mobius_transform(v)
    vN = v.grand
    return all(mobius_bounds(card(A), vN).contains(m[A]) for A in range(1, 1 << v.n))


# -- instance generators ---------------------------------------------------

def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_totally_monotone_game(seed, n: int, k_cap: int, denominator: int = 10) -> GameTable:
    """Random game with nonnegative Möbius mass on coalitions of size <= ``k_cap``."""
    check_n(n)
    rng = _rng(seed)
    coeffs = {}
    for A in range(1, 1 << n):
        if card(A) <= k_cap:
            coeffs[A] = Fraction(rng.randint(0, denominator), denominator)
    return inverse_mobius(MobiusVector(n, coeffs))


def random_monotone_game(seed, n: int, denominator: int = 12) -> GameTable:
    """Random monotone game normalised to v(N) = 1.

    Mixes three families so the sample reaches the extremes of the Möbius range:
    increments over the best subcoalition, 0/1 capacities generated by a random
    up-set, and sums of a few unanimity-like steps.
    """
    check_n(n)
    rng = _rng(seed)
    top = full_mask(n)
    kind = rng.randrange(3)
    vals = [ZERO] * (1 << n)
    if kind == 0:
        for A in sorted(range(1, 1 << n), key=card):
            base = max((vals[A & ~(1 << i)] for i in range(n) if A >> i & 1), default=ZERO)
            vals[A] = base + Fraction(rng.randint(0, denominator), denominator)
    elif kind == 1:
        generators = [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, n + 2))]
        for A in range(1, 1 << n):
            vals[A] = Fraction(1 if any(A & g == g for g in generators) else 0)
    else:
        for _ in range(rng.randint(1, 2 * n)):
            g = rng.randrange(1, 1 << n)
            w = Fraction(rng.randint(1, denominator), denominator)
            for A in range(1, 1 << n):
                if A & g == g:
                    vals[A] += w
    if vals[top] == 0:
        vals[top] = Fraction(1)
    scale = vals[top]
    return GameTable(n, [x / scale for x in vals])


def random_game(seed, n: int, low: int = -5, high: int = 5, denominator: int = 4) -> GameTable:
    """Arbitrary game with small rational values; no structural guarantees."""
    check_n(n)
    rng = _rng(seed)
    return GameTable.from_function(n, lambda A: Fraction(rng.randint(low, high), denominator))


def all_masks_by_size(n: int, size: int) -> list:
    return [subset(*c) for c in combinations(range(1, n + 1), size)]
