"""Exact rank of integer matrices by fraction-free (Bareiss) elimination."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of a list of integer row vectors."""
    m = [list(map(int, r)) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            a = m[i][c]
            row = m[i]
            top = m[r]
            # Bareiss step: the division by the previous pivot is exact
            for j in range(c, ncols):
                row[j] = (p * row[j] - a * top[j]) // prev
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Determinant of a square matrix with exact entries (ints or Fractions)."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                for j in range(c, n):
                    a[i][j] -= f * a[c][j]
    return det
