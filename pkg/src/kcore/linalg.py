"""Exact linear algebra over the rationals.

Rank uses fraction-free (Bareiss) elimination on integer-scaled rows; solving
and null spaces use Gauss-Jordan on :class:`~fractions.Fraction` entries.
"""

from fractions import Fraction
from math import lcm


def _integer_rows(rows):
    out = []
    for row in rows:
        scale = 1
        for x in row:
            scale = lcm(scale, Fraction(x).denominator)
        out.append([int(Fraction(x) * scale) for x in row])
    return out


def rank(rows) -> int:
    """Rank of a rational matrix given as a sequence of rows."""
    a = _integer_rows(rows)
    if not a:
        return 0
    n_rows, n_cols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        p = a[r][c]
        for i in range(r + 1, n_rows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, n_cols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def rref(rows):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def solve(a, b):
    """Unique solution of the square system a·x = b, or None when singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return None
        m[c], m[pivot] = m[pivot], m[c]
        p = m[c][c]
        row_c = m[c]
        for i in range(c + 1, n):
            f = m[i][c]
            if f:
                f /= p
                row_i = m[i]
                for j in range(c, n + 1):
                    row_i[j] -= f * row_c[j]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = m[i][n] - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / m[i][i]
    return tuple(x)


def nullspace(rows, n_cols: int):
    """Basis of {x : rows·x = 0} as a list of tuples."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(n_cols)) for i in range(n_cols)]
    m, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n_cols
        x[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -m[r][f]
        basis.append(tuple(x))
    return basis


def independent_rows(rows) -> list:
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    chosen = []
    current = 0
    for i, row in enumerate(rows):
        if rank([rows[j] for j in chosen] + [row]) > current:
            chosen.append(i)
            current += 1
    return chosen
