"""Linear constraint systems in Möbius coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .setfn import label


@dataclass(frozen=True)
class Row:
    """``coeffs · x  (>= | =)  rhs``; ``tag`` records where the row came from,
    e.g. ``("dominance", A)``, ``("efficiency",)``, ``("monotonicity", i, L)``,
    ``("nonneg", K)``."""

    coeffs: tuple
    relation: str
    rhs: Fraction
    tag: tuple

    def lhs(self, x) -> Fraction:
        return sum((c * xi for c, xi in zip(self.coeffs, x) if c), Fraction(0))

    def satisfied(self, x) -> bool:
        value = self.lhs(x)
        return value == self.rhs if self.relation == "=" else value >= self.rhs

    def tight(self, x) -> bool:
        return self.lhs(x) == self.rhs

    def describe(self) -> str:
        kind = self.tag[0]
        if kind == "dominance":
            return f"dominance({label(self.tag[1])})"
        if kind == "monotonicity":
            return f"monotonicity({self.tag[1]},{label(self.tag[2])})"
        if kind == "nonneg":
            return f"nonneg({label(self.tag[1])})"
        return kind


@dataclass(frozen=True)
class ConstraintSystem:
    """Rows over the variables ``variables`` (masks of P^k_*(N) in binary order)."""

    n: Optional[int]
    k: Optional[int]
    variables: tuple
    rows: tuple

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    def equalities(self) -> list:
        return [i for i, r in enumerate(self.rows) if r.relation == "="]

    def inequalities(self) -> list:
        return [i for i, r in enumerate(self.rows) if r.relation != "="]

    def violated(self, x) -> list:
        return [i for i, r in enumerate(self.rows) if not r.satisfied(x)]

    def tight(self, x) -> list:
        return [i for i, r in enumerate(self.rows) if r.tight(x)]

    def feasible(self, x) -> bool:
        return all(r.satisfied(x) for r in self.rows)

    def homogenized(self) -> "ConstraintSystem":
        rows = tuple(Row(r.coeffs, r.relation, Fraction(0), r.tag) for r in self.rows)
        return ConstraintSystem(self.n, self.k, self.variables, rows)

    def variable_labels(self) -> list:
        return [label(m) for m in self.variables]


def make_system(num_vars: int, rows) -> ConstraintSystem:
    """Generic system on anonymous variables from ``(coeffs, relation, rhs)`` triples."""
    built = []
    for i, (coeffs, rel, rhs) in enumerate(rows):
        if rel not in (">=", "="):
            raise ValueError(f"relation must be '>=' or '=', got {rel!r}")
        if len(coeffs) != num_vars:
            raise ValueError(f"row {i} has {len(coeffs)} coefficients, expected {num_vars}")
        built.append(Row(tuple(Fraction(c) for c in coeffs), rel, Fraction(rhs), ("row", i)))
    return ConstraintSystem(None, None, tuple(range(num_vars)), tuple(built))
