"""Minimal binomial generators of the toric ideal of a monomial curve.

Relations are read off the factorization graphs: two factorizations of
``d`` are adjacent when they share a generator, and every degree whose
graph is disconnected (a Betti element) contributes one relation per
extra connected component.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import SingleGenerator
from .semigroup import NumericalSemigroup


@dataclass(frozen=True, order=True)
class Factorization:
    exponents: tuple[int, ...]
    degree: int

    @property
    def support(self) -> frozenset[int]:
        return frozenset(j for j, e in enumerate(self.exponents) if e)


@dataclass(frozen=True)
class BinomialRelation:
    """X^alpha - X^beta, with disjoint supports."""

    alpha: Factorization
    beta: Factorization

    @property
    def degree(self) -> int:
        return self.alpha.degree

    @property
    def lattice_vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.alpha.exponents, self.beta.exponents))


def _factor(gens: tuple[int, ...], d: int) -> list[tuple[int, ...]]:
    r = len(gens)
    out: list[tuple[int, ...]] = []
    z = [0] * r

    # lexicographically decreasing: the first exponent is tried largest first
    def rec(j: int, rest: int) -> None:
        if j == r - 1:
            if rest % gens[j] == 0:
                z[j] = rest // gens[j]
                out.append(tuple(z))
                z[j] = 0
            return
        for e in range(rest // gens[j], -1, -1):
            z[j] = e
            rec(j + 1, rest - e * gens[j])
        z[j] = 0

    if d >= 0:
        rec(0, d)
    return out


def factorizations(S: NumericalSemigroup, d: int) -> list[Factorization]:
    """All ways of writing ``d`` over the minimal generators, lex-descending."""
    return [Factorization(z, d) for z in _factor(S.min_gens, d)]


def _components(facts: list[tuple[int, ...]], r: int) -> list[list[tuple[int, ...]]]:
    # union-find over generator indices: factorizations sharing an index
    # end up under the same root
    parent = list(range(r))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for z in facts:
        idx = [j for j, e in enumerate(z) if e]
        for j in idx[1:]:
            a, b = find(idx[0]), find(j)
            if a != b:
                parent[b] = a
    groups: dict[int, list[tuple[int, ...]]] = {}
    for z in facts:
        first = next(j for j, e in enumerate(z) if e)
        groups.setdefault(find(first), []).append(z)
    return list(groups.values())


def _check(S: NumericalSemigroup) -> None:
    if S.embedding_dimension < 2:
        raise SingleGenerator(f"{S} has a single generator; its toric ideal is zero")


def degree_bound(S: NumericalSemigroup) -> int:
    """Past F + n_1 + n_r every factorization graph is connected."""
    return S.frobenius + S.min_gens[0] + S.min_gens[-1]


@lru_cache(maxsize=256)
def _betti_components(gens: tuple[int, ...], bound: int):
    out = []
    for d in range(1, bound + 1):
        facts = _factor(gens, d)
        if len(facts) < 2:
            continue
        comps = _components(facts, len(gens))
        if len(comps) > 1:
            out.append((d, comps))
    return tuple(out)


def betti_elements(S: NumericalSemigroup) -> list[int]:
    _check(S)
    return [d for d, _ in _betti_components(S.min_gens, degree_bound(S))]


def minimal_relations(S: NumericalSemigroup, reverse: bool = False) -> list[BinomialRelation]:
    """A minimal binomial generating set of the toric ideal of ``S``.

    Each component is represented by its lex-smallest factorization (lex-largest
    with ``reverse=True``); the base component is the one holding the overall
    representative. The lex-larger side of each binomial is ``alpha``.
    """
    _check(S)
    pick = max if reverse else min
    rels = []
    for d, comps in _betti_components(S.min_gens, degree_bound(S)):
        reps = [pick(c) for c in comps]
        base = pick(reps)
        for z in sorted(reps):
            if z == base:
                continue
            hi, lo = max(z, base), min(z, base)
            rels.append(BinomialRelation(Factorization(hi, d), Factorization(lo, d)))
    return rels
