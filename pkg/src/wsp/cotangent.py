"""Graded dimensions of T^1 of a monomial curve (Buchweitz's formula)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import FormulaInconsistency, GenusTooSmall
from .linalg import rank
from .semigroup import NumericalSemigroup
from .toric import BinomialRelation, minimal_relations


@dataclass(frozen=True)
class GradedT1Table:
    by_degree: dict[int, int]
    t1_plus: int
    t1_minus: int
    # degree -> (#A_l, dim V_l), for every degree that was examined
    diagnostics: dict[int, tuple[int, int]] = field(repr=False)


def a_set(S: NumericalSemigroup, l: int) -> set[int]:
    """Generator indices (1-based) with n_i + l not in S."""
    return {i for i, n in enumerate(S.min_gens, start=1) if (n + l) not in S}


def v_dim(S: NumericalSemigroup, relations: Sequence[BinomialRelation], l: int) -> int:
    return rank([r.lattice_vector for r in relations if (r.degree + l) not in S])


def _raw(S, relations, l) -> tuple[int, int, int]:
    a = len(a_set(S, l))
    v = v_dim(S, relations, l)
    return a, v, a - v - 1


def t1_dim(S: NumericalSemigroup, relations: Sequence[BinomialRelation], l: int) -> int:
    if S.in_end(l):
        return 0
    a, v, dim = _raw(S, relations, l)
    if dim < 0:
        raise FormulaInconsistency(
            f"{S}, degree {l}: #A = {a}, dim V = {v} gives {dim} < 0"
        )
    return dim


def degree_range(S: NumericalSemigroup, relations: Sequence[BinomialRelation]) -> list[int]:
    """Degrees where T^1 can be nonzero: [-max d_i, -1] and gaps outside End."""
    lowest = max(r.degree for r in relations)
    end = set(S.end_gaps)
    return list(range(-lowest, 0)) + [l for l in S.gaps if l not in end]


def t1_table(S: NumericalSemigroup, relations: Sequence[BinomialRelation] | None = None) -> GradedT1Table:
    if S.genus < 1:
        raise GenusTooSmall(f"{S} has genus 0")
    if relations is None:
        relations = minimal_relations(S)
    by_degree = {}
    diagnostics = {}
    for l in degree_range(S, relations):
        a, v, _ = _raw(S, relations, l)
        diagnostics[l] = (a, v)
        dim = t1_dim(S, relations, l)
        if dim:
            by_degree[l] = dim
    plus = sum(d for l, d in by_degree.items() if l > 0)
    minus = sum(d for l, d in by_degree.items() if l < 0)
    return GradedT1Table(by_degree, plus, minus, diagnostics)


def is_negatively_graded(S: NumericalSemigroup) -> bool:
    return t1_table(S).t1_plus == 0
