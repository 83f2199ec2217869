"""Enumeration of numerical semigroups by genus, and the genus <= 6 table."""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .bounds import bounds_report
from .errors import GenusLimitExceeded
from .semigroup import NumericalSemigroup, from_gaps, from_generators

DEFAULT_MAX_GENUS = 20


def max_genus() -> int:
    return int(os.environ.get("WSP_MAX_GENUS", DEFAULT_MAX_GENUS))


def _remove(S: NumericalSemigroup, m: int) -> NumericalSemigroup:
    # m is a minimal generator above F, so S minus {m} is a semigroup with
    # Frobenius number m
    return from_gaps(S.gaps + (m,))


def children(S: NumericalSemigroup) -> list[NumericalSemigroup]:
    return [_remove(S, m) for m in S.min_gens if m > S.frobenius]


def semigroups_of_genus(g: int, limit: int | None = None) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus ``g``, each once, by depth-first
    descent of the semigroup tree rooted at the nonnegative integers."""
    limit = max_genus() if limit is None else limit
    if g < 0 or g > limit:
        raise GenusLimitExceeded(f"genus {g} outside [0, {limit}]")
    stack = [from_generators([1])]
    while stack:
        S = stack.pop()
        if S.genus == g:
            yield S
        else:
            stack.extend(reversed(children(S)))


@dataclass(frozen=True)
class Table1Row:
    gaps: tuple[int, ...]
    new_lower: int
    rv_upper: int
    t1_plus: int


def table1_report() -> list[Table1Row]:
    """Semigroups of genus 2..6 with a nonzero positive part of T^1."""
    rows = []
    for g in range(2, 7):
        for S in semigroups_of_genus(g):
            rep = bounds_report(S)
            if rep.t1_plus > 0:
                rows.append(Table1Row(S.gaps, rep.new_lower, rep.rv_upper, rep.t1_plus))
    rows.sort(key=lambda row: (len(row.gaps), row.gaps))
    return rows
