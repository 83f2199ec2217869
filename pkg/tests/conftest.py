from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest
from hypothesis import strategies as st

from wsp.enumerate import semigroups_of_genus
from wsp.semigroup import from_generators


def brute_gap_sets(g: int) -> set[tuple[int, ...]]:
    """All gap sets of genus g, by checking every g-subset of [1, 2g-1]."""
    if g == 0:
        return {()}
    out = set()
    top = 2 * g
    for gaps in combinations(range(1, top), g):
        gs = set(gaps)
        members = [n for n in range(1, top) if n not in gs]
        if all(a + b not in gs for a in members for b in members):
            out.add(gaps)
    return out


def brute_end(S) -> set[int]:
    """End(N) minus N, straight from the definition (no generator shortcut)."""
    nonzero = [s for s in range(1, S.frobenius + 2) if s in S]
    return {l for l in S.gaps if all((l + s) in S for s in nonzero)}


def fraction_rank(rows) -> int:
    """Plain Gaussian elimination over Q."""
    m = [[Fraction(x) for x in row] for row in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


@pytest.fixture(scope="session")
def upto_genus_8():
    return [S for g in range(9) for S in semigroups_of_genus(g)]


@pytest.fixture(scope="session")
def genus_2_to_8(upto_genus_8):
    return [S for S in upto_genus_8 if S.genus >= 2]


@st.composite
def semigroups(draw, max_gen: int = 14, max_count: int = 4):
    gens = draw(st.lists(st.integers(2, max_gen), min_size=2, max_size=max_count, unique=True))
    g = 0
    for n in gens:
        g = gcd(g, n)
    if g != 1:
        gens.append(draw(st.sampled_from([n for n in range(2, max_gen + 2) if gcd(n, g) == 1])))
    return from_generators(gens)
