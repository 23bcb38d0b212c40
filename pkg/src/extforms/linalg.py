"""Exact linear algebra over the rationals.

Kernels are computed by fraction-free integer elimination (denominators are
cleared first), so rank decisions never depend on floating point.  Small
square solves and inverses use ordinary rational Gaussian elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Mat = list[list[Fraction]]


def clear_denominators(row: list[Fraction]) -> list[int]:
    """Scale a rational row to a primitive integer row."""
    d = 1
    for x in row:
        d = lcm(d, Fraction(x).denominator)
    ints = [int(x * d) for x in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def row_reduce_int(rows: list[list[int]], ncols: int):
    """Fraction-free reduced row echelon over the integers.

    Returns (reduced rows, pivots) where pivots is a list of (row, col).
    Pivot rows have zero entries in every other pivot column.
    """
    m = [r[:] for r in rows]
    pivots: list[tuple[int, int]] = []
    pr = 0
    for c in range(ncols):
        pivot = None
        for r in range(pr, len(m)):
            if m[r][c]:
                pivot = r
                break
        if pivot is None:
            continue
        m[pr], m[pivot] = m[pivot], m[pr]
        pv = m[pr][c]
        for r in range(len(m)):
            if r == pr or not m[r][c]:
                continue
            a = m[r][c]
            g = gcd(pv, a)
            f1, f2 = pv // g, a // g
            row, prow = m[r], m[pr]
            for j in range(ncols):
                row[j] = row[j] * f1 - prow[j] * f2
            g2 = 0
            for j in range(ncols):
                g2 = gcd(g2, row[j])
            if g2 > 1:
                for j in range(ncols):
                    row[j] //= g2
        pivots.append((pr, c))
        pr += 1
        if pr == len(m):
            break
    return m, pivots


def rank(rows: Mat, ncols: int) -> int:
    ints = [clear_denominators(r) for r in rows]
    _, pivots = row_reduce_int(ints, ncols)
    return len(pivots)


def nullspace(rows: Mat, ncols: int) -> list[list[Fraction]]:
    """Basis of the right null space, one vector per free column."""
    ints = [clear_denominators(r) for r in rows]
    m, pivots = row_reduce_int(ints, ncols)
    pivcols = {c for _, c in pivots}
    basis = []
    for fc in range(ncols):
        if fc in pivcols:
            continue
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in pivots:
            if m[r][fc]:
                vec[pc] = Fraction(-m[r][fc], m[r][pc])
        basis.append(vec)
    return basis


def solve(rows: Mat, rhs: list[Fraction]) -> list[Fraction] | None:
    """One solution of rows @ x = rhs, or None if inconsistent.

    Free variables are set to zero; pivots are chosen in column order, so
    the returned solution is deterministic.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    aug = [list(rows[r]) + [rhs[r]] for r in range(nrows)]
    ints = [clear_denominators(r) for r in aug]
    m, pivots = row_reduce_int(ints, ncols + 1)
    sol = [Fraction(0)] * ncols
    for r, c in pivots:
        if c == ncols:
            return None  # pivot in the rhs column: inconsistent
        sol[c] = Fraction(m[r][ncols], m[r][c])
    return sol


def invert(rows: Mat) -> Mat:
    """Inverse of a square rational matrix; raises on singular input."""
    n = len(rows)
    aug = [list(rows[r]) + [Fraction(int(i == r)) for i in range(n)] for r in range(n)]
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if aug[r][c]:
                pivot = r
                break
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def det(rows: Mat) -> Fraction:
    """Determinant by rational elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    acc = Fraction(1)
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if m[r][c]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        pv = m[c][c]
        acc *= pv
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return acc * sign
