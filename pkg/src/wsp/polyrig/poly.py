"""Sparse multivariate polynomials with rational coefficients.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by variable
name (digits compared numerically, so ``f_8_6 < f_12_4``). Terms are kept
in a dict with no zero coefficients, which makes ``==`` structural.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from ..errors import NotMonicInX
from ..linalg import determinant

Monomial = tuple[tuple[str, int], ...]
Coeff = Union[int, Fraction]

_digits = re.compile(r"(\d+)")


def var_key(name: str) -> tuple:
    return tuple(int(p) if p.isdigit() else p for p in _digits.split(name))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda ve: var_key(ve[0])))


class Polynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = Fraction(c)

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c: Coeff) -> Polynomial:
        return cls({(): c})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> Polynomial:
        if exp == 0:
            return cls.const(1)
        return cls({((name, exp),): 1})

    @classmethod
    def lift(cls, x) -> Polynomial:
        return x if isinstance(x, Polynomial) else cls.const(x)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other) -> Polynomial:
        other = Polynomial.lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return _raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-Polynomial.lift(other))

    def __rsub__(self, other) -> Polynomial:
        return Polynomial.lift(other) - self

    def __mul__(self, other) -> Polynomial:
        other = Polynomial.lift(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = Polynomial.const(other)
            else:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # inspection ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def degree_in(self, name: str) -> int:
        """Degree in ``name``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(dict(m).get(name, 0) for m in self.terms)

    def total_degree(self, names: Iterable[str] | None = None) -> int:
        if not self.terms:
            return -1
        keep = None if names is None else set(names)
        return max(sum(e for v, e in m if keep is None or v in keep) for m in self.terms)

    def coefficients_in(self, name: str) -> dict[int, Polynomial]:
        """Split as sum_k c_k * name^k; returns {k: c_k}."""
        out: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self.terms.items():
            k = 0
            rest = []
            for v, e in m:
                if v == name:
                    k = e
                else:
                    rest.append((v, e))
            out.setdefault(k, {})[tuple(rest)] = c
        return {k: _raw(t) for k, t in out.items()}

    def coeff_of(self, name: str, k: int) -> Polynomial:
        return self.coefficients_in(name).get(k, Polynomial())

    def part_of_degree(self, names: Iterable[str], degree: int) -> Polynomial:
        """Terms whose total degree in ``names`` equals ``degree``."""
        keep = set(names)
        return _raw({
            m: c for m, c in self.terms.items()
            if sum(e for v, e in m if v in keep) == degree
        })

    def term_weights(self, weights: Mapping[str, int]) -> set[int]:
        return {sum(weights[v] * e for v, e in m) for m in self.terms}

    def is_isobaric(self, weight: int | None, weights: Mapping[str, int]) -> bool:
        """All terms have weight ``weight`` (any common weight if None)."""
        ws = self.term_weights(weights)
        if weight is None:
            return len(ws) <= 1
        return ws <= {weight}

    def truncate(self, name: str, below: int) -> Polynomial:
        """Drop every term with ``name``-degree >= ``below``."""
        return _raw({m: c for m, c in self.terms.items() if dict(m).get(name, 0) < below})

    # substitution and division -----------------------------------------
    def substitute(self, assignment: Mapping[str, object]) -> Polynomial:
        subs = {k: Polynomial.lift(v) for k, v in assignment.items()}
        cache: dict[tuple[str, int], Polynomial] = {}
        out = Polynomial()
        for m, c in self.terms.items():
            term = Polynomial.const(c)
            keep = []
            for v, e in m:
                if v in subs:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = subs[v] ** e
                    term = term * cache[key]
                else:
                    keep.append((v, e))
            out = out + term * _raw({tuple(keep): Fraction(1)})
        return out

    def divmod_monic(self, divisor: Polynomial, name: str = "X") -> tuple[Polynomial, Polynomial]:
        """Division with remainder by a divisor monic in ``name``.

        The remainder has ``name``-degree below that of the divisor; the
        coefficients may involve any other variables.
        """
        n = divisor.degree_in(name)
        lead = divisor.coeff_of(name, n) if n >= 0 else None
        if n < 1 or lead != Polynomial.const(1):
            raise NotMonicInX(f"divisor is not monic of positive degree in {name}")
        q = Polynomial()
        r = self
        while r.degree_in(name) >= n:
            k = r.degree_in(name)
            c = r.coeff_of(name, k)
            step = c * Polynomial.var(name, k - n)
            q = q + step
            r = r - step * divisor
        return q, r

    # display ------------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        # graded lex: higher total degree first, then lexicographic by
        # (variable order, exponent), larger first
        def key(item):
            m, _ = item
            deg = sum(e for _, e in m)
            return (-deg, [(var_key(v), -e) for v, e in m])

        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            factors = [v if e == 1 else f"{v}^{e}" for v, e in m]
            if a != 1 or not factors:
                factors.insert(0, str(a))
            body = "*".join(factors)
            if i == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _raw(terms: dict[Monomial, Fraction]) -> Polynomial:
    p = Polynomial.__new__(Polynomial)
    p.terms = terms
    return p


_token = re.compile(r"\s*([+-])?\s*([^+\-\s][^+\-]*)")


def parse(text: str) -> Polynomial:
    """Inverse of ``str`` on canonical text (``3/2*X^2*f_8_6 - Y3 + 1``)."""
    text = text.strip()
    if text == "0":
        return Polynomial()
    out = Polynomial()
    pos = 0
    while pos < len(text):
        m = _token.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(sign)
        mono: dict[str, int] = {}
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
            else:
                name, _, exp = factor.partition("^")
                mono[name] = mono.get(name, 0) + (int(exp) if exp else 1)
        key = tuple(sorted(mono.items(), key=lambda ve: var_key(ve[0])))
        out = out + Polynomial({key: coeff})
        pos = m.end()
    return out


def resultant(p: Polynomial, q: Polynomial, name: str = "X") -> Fraction:
    """Sylvester resultant of two univariate polynomials with constant coefficients."""
    def coeffs(f: Polynomial) -> list[Fraction]:
        parts = f.coefficients_in(name)
        n = f.degree_in(name)
        out = []
        for k in range(n, -1, -1):
            c = parts.get(k, Polynomial())
            if c.variables():
                raise ValueError(f"coefficient of {name}^{k} is not a constant")
            out.append(c.terms.get((), Fraction(0)))
        return out

    a, b = coeffs(p), coeffs(q)
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + a + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + b + [Fraction(0)] * (size - n - 1 - i))
    return determinant(rows)
