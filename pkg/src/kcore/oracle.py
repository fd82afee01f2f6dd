"""Brute-force exact vertex and extreme-ray enumeration for small polyhedra.

Every vertex is found as the unique solution of a square subsystem made of
independent equality rows plus a choice of inequality rows, and keeps the row
subset that produced it.  Extreme rays come from the same search on the
homogeneous system one dimension down: a one-dimensional kernel whose
generator (or its negative) satisfies every homogeneous inequality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import _guard, linalg
from .system import ConstraintSystem, Row

MAX_VARS = 16
MAX_ROWS = 40
MAX_SUBSETS = 250_000


@dataclass
class PolyhedronSummary:
    feasible: bool
    vertices: list
    rays: list
    lines: list = field(default_factory=list)
    # row-index subset that produced each vertex
    bases: list = field(default_factory=list)

    @property
    def bounded(self) -> bool:
        return not self.rays and not self.lines

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def ray_set(self) -> frozenset:
        return frozenset(self.rays)


def normalize_direction(d) -> tuple:
    """Scale so the first nonzero component has absolute value 1."""
    lead = next((x for x in d if x != 0), None)
    if lead is None:
        raise ValueError("zero vector has no direction")
    s = abs(Fraction(lead))
    return tuple(Fraction(x) / s for x in d)


def _check_size(system: ConstraintSystem, picks: int, pool: int):
    _guard.check("oracle variables", system.num_vars, MAX_VARS)
    _guard.check("oracle rows", len(system.rows), MAX_ROWS)
    _guard.check("oracle candidate subsets", comb(pool, picks) if picks >= 0 else 0, MAX_SUBSETS)


def _with_lineality_cut(system: ConstraintSystem):
    """Add x·l = 0 for a basis of the lineality space so the result is pointed."""
    lines = linalg.nullspace([r.coeffs for r in system.rows], system.num_vars)
    if not lines:
        return system, []
    extra = tuple(Row(l, "=", Fraction(0), ("lineality", j)) for j, l in enumerate(lines))
    return ConstraintSystem(system.n, system.k, system.variables, system.rows + extra), lines


class _Echelon:
    """Rows kept with zeros in every earlier pivot column; last entry is the rhs."""

    __slots__ = ("rows", "pivots")

    def __init__(self, rows=(), pivots=()):
        self.rows = list(rows)
        self.pivots = list(pivots)

    def add(self, coeffs, rhs):
        """Echelon extended by one row, or None when the row is dependent."""
        r = list(coeffs) + [rhs]
        for p, b in zip(self.pivots, self.rows):
            f = r[p]
            if f:
                r = [x - f * y if y else x for x, y in zip(r, b)]
        width = len(r) - 1
        pivot = next((c for c in range(width) if r[c] != 0), None)
        if pivot is None:
            return None
        lead = r[pivot]
        if lead != 1:
            r = [x / lead if x else x for x in r]
        return _Echelon(self.rows + [r], self.pivots + [pivot])

    def back_substitute(self, width, free=None):
        """Solution with the (at most one) free column set to 1."""
        x = [Fraction(0)] * width
        if free is not None:
            x[free] = Fraction(1)
        for p, row in zip(reversed(self.pivots), reversed(self.rows)):
            s = row[-1]
            for c in range(width):
                if c != p and row[c]:
                    s -= row[c] * x[c]
            x[p] = s
        return tuple(x)


def _independent_choices(rows, base, pool, picks, homogeneous=False):
    """Yield (echelon, chosen indices) for every independent ``picks``-subset of ``pool``
    added on top of the rows ``base``; dependent prefixes are pruned."""
    ech = _Echelon()
    rhs = (lambda i: Fraction(0)) if homogeneous else (lambda i: rows[i].rhs)
    for i in base:
        nxt = ech.add(rows[i].coeffs, rhs(i))
        if nxt is None:
            return
        ech = nxt

    def walk(start, ech, chosen):
        if len(chosen) == picks:
            yield ech, tuple(chosen)
            return
        need = picks - len(chosen)
        for j in range(start, len(pool) - need + 1):
            i = pool[j]
            nxt = ech.add(rows[i].coeffs, rhs(i))
            if nxt is not None:
                chosen.append(i)
                yield from walk(j + 1, nxt, chosen)
                chosen.pop()

    yield from walk(0, ech, [])


def _basis_equalities(system):
    rows = system.rows
    eq = system.equalities()
    return [eq[i] for i in linalg.independent_rows([rows[j].coeffs for j in eq])]


def _vertices(system: ConstraintSystem):
    rows = system.rows
    ineq = system.inequalities()
    basis_eq = _basis_equalities(system)
    picks = system.num_vars - len(basis_eq)
    found = {}
    if picks < 0:
        return found
    _check_size(system, picks, len(ineq))
    for ech, chosen in _independent_choices(rows, basis_eq, ineq, picks):
        x = ech.back_substitute(system.num_vars)
        if x not in found and system.feasible(x):
            found[x] = tuple(basis_eq) + chosen
    return found


def _extreme_rays(system: ConstraintSystem):
    rows = system.rows
    ineq = system.inequalities()
    basis_eq = _basis_equalities(system)
    picks = system.num_vars - 1 - len(basis_eq)
    if picks < 0:
        return []
    _check_size(system, picks, len(ineq))
    found = set()
    for ech, _ in _independent_choices(rows, basis_eq, ineq, picks, homogeneous=True):
        free = next(c for c in range(system.num_vars) if c not in ech.pivots)
        d = ech.back_substitute(system.num_vars, free)
        values = [rows[i].lhs(d) for i in ineq]
        if all(x >= 0 for x in values):
            found.add(normalize_direction(d))
        elif all(x <= 0 for x in values):
            found.add(normalize_direction([-x for x in d]))
    return sorted(found)


def enumerate_vertices(system: ConstraintSystem) -> PolyhedronSummary:
    """Vertices, extreme rays and lineality of ``{x : rows}``, all exact."""
    pointed, lines = _with_lineality_cut(system)
    found = _vertices(pointed)
    if not found:
        return PolyhedronSummary(False, [], [], [])
    vertices = sorted(found) if not lines else []
    bases = [found[v] for v in vertices]
    rays = _extreme_rays(pointed.homogenized())
    return PolyhedronSummary(True, vertices, rays, lines, bases)


def is_feasible(system: ConstraintSystem) -> bool:
    pointed, _ = _with_lineality_cut(system)
    return bool(_vertices(pointed))


def cone_rays(system: ConstraintSystem) -> list:
    """Extreme rays of the recession cone ``{d : rows with rhs 0}`` (pointed part)."""
    pointed, _ = _with_lineality_cut(system)
    return _extreme_rays(pointed.homogenized())
