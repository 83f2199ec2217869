"""Numerical semigroups and their classical invariants."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from math import gcd
from typing import Iterable

from .errors import EmptyInput, GenusTooSmall, NonCoprime, NotAMember, NotASemigroup


@dataclass(frozen=True)
class NumericalSemigroup:
    """A cofinite submonoid of the nonnegative integers.

    ``membership[n]`` answers ``n in S`` for ``0 <= n <= max(frobenius, 0)``;
    everything above the Frobenius number is a member.
    """

    min_gens: tuple[int, ...]
    frobenius: int
    membership: tuple[bool, ...] = field(repr=False)
    gaps: tuple[int, ...] = field(repr=False)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n > self.frobenius:
            return True
        return self.membership[n]

    def contains(self, n: int) -> bool:
        return n in self

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.min_gens)) + ">"

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def multiplicity(self) -> int:
        return self.min_gens[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_gens)

    def small_elements(self) -> list[int]:
        """Members up to and including ``frobenius + 1``."""
        return [n for n in range(self.frobenius + 2) if n in self]

    def apery_set(self, m: int) -> list[int]:
        if m <= 0 or m not in self:
            raise NotAMember(f"{m} is not a positive element of {self}")
        out: list[int | None] = [None] * m
        missing = m
        n = 0
        while missing:
            if n in self and out[n % m] is None:
                out[n % m] = n
                missing -= 1
            n += 1
        return out  # type: ignore[return-value]

    def _require_genus(self, at_least: int = 1) -> None:
        if self.genus < at_least:
            raise GenusTooSmall(f"{self} has genus {self.genus} < {at_least}")

    @cached_property
    def end_gaps(self) -> tuple[int, ...]:
        # l + n in S for every nonzero member n follows from the check on the
        # minimal generators, since each nonzero member is n_j + (member).
        self._require_genus()
        return tuple(
            l for l in self.gaps if all((l + n) in self for n in self.min_gens)
        )

    def end_set_gaps(self) -> list[int]:
        return list(self.end_gaps)

    def lambda_(self) -> int:
        """Type of the semigroup ring: #(End(N) - N)."""
        return len(self.end_gaps)

    def in_end(self, l: int) -> bool:
        """Membership of ``l`` in End(N) = {n : n + (N minus 0) inside N}."""
        if l < 0:
            return False
        return all((l + n) in self for n in self.min_gens)

    def is_symmetric(self) -> bool:
        self._require_genus()
        by_count = self.frobenius == 2 * self.genus - 1
        by_duality = all(
            (n in self) != ((self.frobenius - n) in self)
            for n in range(self.frobenius + 1)
        )
        if by_count != by_duality:  # pragma: no cover - would be a bug
            raise AssertionError(f"symmetry tests disagree on {self}")
        return by_count

    def ewt(self) -> int:
        """Effective weight: per gap, count the minimal generators below it."""
        self._require_genus()
        return sum(sum(1 for n in self.min_gens if n < l) for l in self.gaps)

    def wt(self) -> int:
        self._require_genus()
        return sum(l - i for i, l in enumerate(self.gaps, start=1))


def _min_gens_from_table(member, frobenius: int) -> tuple[int, ...]:
    top = max(frobenius, 0)
    m = next(n for n in range(1, top + 2) if member(n))
    gens = []
    # every minimal generator is at most max(F + m, m)
    for n in range(m, max(frobenius + m, m) + 1):
        if not member(n):
            continue
        if any(member(a) and member(n - a) for a in range(m, n - m + 1)):
            continue
        gens.append(n)
    return tuple(gens)


def _build(table: list[bool]) -> NumericalSemigroup:
    frobenius = max((n for n, inside in enumerate(table) if not inside), default=-1)
    table = table[: max(frobenius, 0) + 1]
    member = lambda n: n >= 0 and (n > frobenius or table[n])
    gaps = tuple(n for n in range(1, frobenius + 1) if not table[n])
    return NumericalSemigroup(
        min_gens=_min_gens_from_table(member, frobenius),
        frobenius=frobenius,
        membership=tuple(table),
        gaps=gaps,
    )


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyInput("need at least one generator")
    if gens[0] <= 0:
        raise NotASemigroup(f"generators must be positive, got {gens[0]}")
    if reduce(gcd, gens) != 1:
        raise NonCoprime(f"gcd{tuple(gens)} = {reduce(gcd, gens)}")
    m = gens[0]
    table = [True]
    run = 1
    # a run of m consecutive members means every larger integer is a member
    while run < m:
        n = len(table)
        inside = any(n >= g and table[n - g] for g in gens)
        table.append(inside)
        run = run + 1 if inside else 0
    return _build(table)


def from_gaps(gap_set: Iterable[int]) -> NumericalSemigroup:
    gap_set = set(int(x) for x in gap_set)
    if any(x <= 0 for x in gap_set):
        raise NotASemigroup("gaps must be positive integers")
    frobenius = max(gap_set, default=-1)
    table = [n not in gap_set for n in range(max(frobenius, 0) + 1)]
    members = [n for n in range(1, frobenius + 1) if table[n]]
    for i, a in enumerate(members):
        for b in members[i:]:
            if a + b > frobenius:
                break
            if not table[a + b]:
                raise NotASemigroup(f"{a} + {b} = {a + b} is listed as a gap")
    return _build(table)


def ordinary(g: int) -> NumericalSemigroup:
    """The semigroup {0, g+1, g+2, ...} of genus g."""
    return from_generators(range(g + 1, 2 * g + 2))

