"""5x5 skew-symmetric matrices of polynomials and their 4x4 Pfaffians."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .poly import Polynomial

PAIRS = tuple(combinations(range(1, 6), 2))


@dataclass(frozen=True)
class SkewMatrix5:
    """Upper-triangle entries keyed by 1-based ``(i, j)`` with ``i < j``."""

    upper: dict[tuple[int, int], Polynomial]

    def __post_init__(self) -> None:
        if set(self.upper) != set(PAIRS):
            raise ValueError("need exactly the ten entries above the diagonal")

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        if i == j:
            return Polynomial()
        if i < j:
            return self.upper[(i, j)]
        return -self.upper[(j, i)]

    def rows(self) -> list[list[Polynomial]]:
        return [[self[i, j] for j in range(1, 6)] for i in range(1, 6)]

    def map(self, fn) -> SkewMatrix5:
        return SkewMatrix5({k: fn(v) for k, v in self.upper.items()})


def pfaffian4(m: SkewMatrix5, idx: tuple[int, int, int, int]) -> Polynomial:
    p, q, r, s = idx
    return m[p, q] * m[r, s] - m[p, r] * m[q, s] + m[p, s] * m[q, r]


def sub_pfaffians(m: SkewMatrix5) -> list[Polynomial]:
    """Pfaffians of the principal 4x4 minors, deleting row/column 1, ..., 5."""
    out = []
    for k in range(1, 6):
        idx = tuple(i for i in range(1, 6) if i != k)
        out.append(pfaffian4(m, idx))  # type: ignore[arg-type]
    return out
