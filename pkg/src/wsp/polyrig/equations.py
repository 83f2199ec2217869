"""Equations of the two families: initial forms, syzygies, base spaces.

Coefficient symbols are named ``f_<i>_<k>`` (and ``g_<i>_<k>`` in family 2)
and carry weight ``k``. A partial polynomial f_i^(j) is
``sum_k f_{i, j+6k} X^(rho-k)`` for ``k = 0..rho``, with ``rho`` fixed by
requiring the unfolded equations to be isobaric.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Sequence

from ..errors import BadFamilyId, CoprimalityFailure, SyzygyFailure, TauTooSmall
from ..linalg import rank
from .pfaffian import PAIRS, SkewMatrix5, sub_pfaffians
from .poly import Polynomial, resultant, var_key

X = Polynomial.var("X")

# Leading coefficients removed by the last coordinate changes.
NORMALIZATIONS = {
    1: ("f_8_1", "f_12_4", "f_8_6"),
    2: ("f_3_6", "g_4_1", "f_4_2"),
}
# Family 1 alternative that keeps every constant term of f_8^(6) free.
ALT_NORMALIZATION_1 = ("f_8_1", "f_12_4", "f_15_6")

Y_INDICES = {1: (3, 4, 7, 8), 2: (1, 2, 3, 4)}


def _check(family_id: int, tau: int) -> None:
    if family_id not in (1, 2):
        raise BadFamilyId(f"family id must be 1 or 2, got {family_id}")
    if tau < 1:
        raise TauTooSmall(f"tau must be >= 1, got {tau}")


def Y(j: int) -> Polynomial:
    return Polynomial.var(f"Y{j}")


def symbol_weight(name: str) -> int:
    return int(name.rsplit("_", 1)[1])


def weights(family_id: int, tau: int, names: Sequence[str] = ()) -> dict[str, int]:
    """Weights of X, the Y_j and any coefficient symbols in ``names``."""
    w = {"X": 6, "t": 1}
    for j in Y_INDICES[family_id]:
        w[f"Y{j}"] = j + 6 * tau
    for n in names:
        if n[0] in "fg" and "_" in n:
            w[n] = symbol_weight(n)
    return w


def weights_for(family_id: int, tau: int, *polys: Polynomial) -> dict[str, int]:
    names = set()
    for p in polys:
        names |= p.variables()
    return weights(family_id, tau, sorted(names))


# -- initial forms --------------------------------------------------------

def initial_forms(family_id: int, tau: int) -> dict[str, Polynomial]:
    """The nine binomials generating the ideal of the monomial curve."""
    _check(family_id, tau)
    t = tau
    if family_id == 1:
        return {
            "F6": Y(3) ** 2 - X ** (2 * t + 1),
            "F7": Y(3) * Y(4) - X ** t * Y(7),
            "F8": Y(4) ** 2 - X ** t * Y(8),
            "F10": Y(3) * Y(7) - X ** (t + 1) * Y(4),
            "F11": Y(4) * Y(7) - Y(3) * Y(8),
            "F12": Y(4) * Y(8) - X ** (2 * t + 2),
            "F14": Y(7) ** 2 - X ** (t + 1) * Y(8),
            "F15": Y(7) * Y(8) - X ** (t + 2) * Y(3),
            "F16": Y(8) ** 2 - X ** (t + 2) * Y(4),
        }
    return {
        "F2": Y(1) ** 2 - X ** t * Y(2),
        "F3": Y(1) * Y(2) - X ** t * Y(3),
        "F4": Y(1) * Y(3) - X ** t * Y(4),
        "G4": Y(2) ** 2 - X ** t * Y(4),
        "F5": Y(1) * Y(4) - Y(2) * Y(3),
        "F6": Y(2) * Y(4) - X ** (2 * t + 1),
        "G6": Y(3) ** 2 - X ** (2 * t + 1),
        "F7": Y(3) * Y(4) - X ** (t + 1) * Y(1),
        "F8": Y(4) ** 2 - X ** (t + 1) * Y(2),
    }


def family_initial_forms(family_id: int, tau: int) -> list[Polynomial]:
    return list(initial_forms(family_id, tau).values())


def form_weight(label: str, tau: int) -> int:
    """F_i and G_i have weight 12*tau + i."""
    return 12 * tau + int(label[1:])


def monomial_curve(family_id: int, tau: int) -> dict[str, Polynomial]:
    """Parametrization X -> t^6, Y_j -> t^(j + 6 tau)."""
    t = Polynomial.var("t")
    sub = {"X": t ** 6}
    for j in Y_INDICES[family_id]:
        sub[f"Y{j}"] = t ** (j + 6 * tau)
    return sub


# -- syzygies of family 1 -------------------------------------------------

def syzygies_family1(tau: int, forms: dict[str, Polynomial] | None = None,
                     powers: dict[int, Polynomial] | None = None) -> list[tuple[str, Polynomial]]:
    """The eight linear syzygies between the family-1 forms.

    ``powers`` maps the exponent offset e to the coefficient standing for
    X^(tau+e); by default the plain powers of X. Returns (label, value) pairs;
    every value must be the zero polynomial.
    """
    _check(1, tau)
    F = forms if forms is not None else initial_forms(1, tau)
    P = powers if powers is not None else {e: X ** (tau + e) for e in (0, 1, 2)}
    y3, y4, y7, y8 = Y(3), Y(4), Y(7), Y(8)
    return [
        ("Y4F6 - Y3F7 - X^t F10", y4 * F["F6"] - y3 * F["F7"] - P[0] * F["F10"]),
        # printed with F10 in some sources; only F11 makes this an identity
        ("Y4F7 - Y3F8 + X^t F11", y4 * F["F7"] - y3 * F["F8"] + P[0] * F["F11"]),
        ("Y4F10 - Y7F7 + X^(t+1) F8 - X^t F14",
         y4 * F["F10"] - y7 * F["F7"] + P[1] * F["F8"] - P[0] * F["F14"]),
        ("Y4F11 - Y7F8 + Y8F7", y4 * F["F11"] - y7 * F["F8"] + y8 * F["F7"]),
        ("Y4F12 - Y8F8 - X^t F16", y4 * F["F12"] - y8 * F["F8"] - P[0] * F["F16"]),
        ("Y4F14 - Y8F10 - Y7F11", y4 * F["F14"] - y8 * F["F10"] - y7 * F["F11"]),
        ("Y4F15 - Y7F12 + X^(t+2) F7", y4 * F["F15"] - y7 * F["F12"] + P[2] * F["F7"]),
        ("Y4F16 - Y8F12 + X^(t+2) F8", y4 * F["F16"] - y8 * F["F12"] + P[2] * F["F8"]),
    ]


def verify_syzygies_family1(tau: int) -> bool:
    for label, value in syzygies_family1(tau):
        if not value.is_zero():
            raise SyzygyFailure(f"syzygy {label} fails for tau={tau}: {value}")
    return True


# -- partial polynomials and the Pfaffian matrices ------------------------

def rho(family_id: int, i: int, j: int, tau: int) -> int:
    """X-degree of the partial polynomial f_i^(j)."""
    d = i - j
    if family_id == 1:
        if d == 11:
            return 0
        eps, r = divmod(d, 6)
        if r == 0:
            return 2 * tau + eps
        if r in (1, 2):
            return tau - 1 + eps
        if r in (3, 4):
            return tau + eps
        raise ValueError(f"no degree rule for f_{i}^({j})")
    if d == 0:
        return 2 * tau
    if d == 6:
        return 2 * tau + 1
    if d == 5:
        return 0
    return tau + d // 6


def partial(family_id: int, tau: int, i: int, j: int, letter: str = "f",
            zero: Sequence[str] = ()) -> Polynomial:
    r = rho(family_id, i, j, tau)
    if r < 0:
        raise ValueError(f"negative degree for {letter}_{i}^({j})")
    out = Polynomial()
    for k in range(r + 1):
        name = f"{letter}_{i}_{j + 6 * k}"
        if name not in zero:
            out = out + Polynomial.var(name) * X ** (r - k)
    return out


def _norm(family_id: int, normalization: Sequence[str] | None) -> tuple[str, ...]:
    return tuple(NORMALIZATIONS[family_id] if normalization is None else normalization)


def _partials(family_id: int, tau: int, normalization) -> dict[str, Polynomial]:
    z = _norm(family_id, normalization)

    def f(i, j, letter="f"):
        return partial(family_id, tau, i, j, letter, z)

    if family_id == 1:
        keys = [(16, 2), (8, 1), (12, 4), (6, 4), (12, 3), (15, 6), (14, 6),
                (8, 6), (12, 5), (7, 5), (10, 2)]
        return {f"f{i}^{j}": f(i, j) for i, j in keys}
    out = {f"f{i}^{j}": f(i, j) for i, j in
           [(6, 4), (2, 4), (6, 3), (8, 6), (3, 6), (2, 6), (6, 5), (2, 5), (4, 2)]}
    out["g4^2"] = f(4, 2, "g")
    out["g4^1"] = f(4, 1, "g")
    return out


def pfaffian_matrix(family_id: int, tau: int, normalization: Sequence[str] | None = None) -> SkewMatrix5:
    _check(family_id, tau)
    p = _partials(family_id, tau, normalization)
    if family_id == 1:
        entries = [
            p["f16^2"], p["f8^1"], p["f12^4"], p["f6^4"],
            p["f12^3"], p["f15^6"] - X ** 2 * p["f8^6"], p["f14^6"] - X * p["f8^6"],
            p["f12^5"], p["f7^5"],
            p["f10^2"],
        ]
    else:
        entries = [
            p["g4^2"], p["g4^1"], p["f6^4"], -p["f2^4"],
            p["f6^3"], p["f8^6"] - X * p["f3^6"], p["f2^6"] - p["f3^6"],
            p["f6^5"], p["f2^5"],
            p["f4^2"],
        ]
    return SkewMatrix5(dict(zip(PAIRS, entries)))


def divisor(family_id: int, tau: int, normalization: Sequence[str] | None = None) -> Polynomial:
    """X^tau - f_8^(6) for family 1, X^tau - f_3^(6) for family 2."""
    _check(family_id, tau)
    p = _partials(family_id, tau, normalization)
    return X ** tau - (p["f8^6"] if family_id == 1 else p["f3^6"])


def rhs_equations(family_id: int, tau: int, normalization: Sequence[str] | None = None) -> list[Polynomial]:
    """Right-hand sides of the L * (X^tau - f) = R form of the five equations,
    written out term by term (not via the matrix)."""
    _check(family_id, tau)
    p = _partials(family_id, tau, normalization)
    if family_id == 1:
        f64, f75, f81, f86 = p["f6^4"], p["f7^5"], p["f8^1"], p["f8^6"]
        f102, f123, f124, f125 = p["f10^2"], p["f12^3"], p["f12^4"], p["f12^5"]
        f146, f156, f162 = p["f14^6"], p["f15^6"], p["f16^2"]
        a = f156 - X ** 2 * f86
        b = f146 - X * f86
        return [
            f81 * a - f123 * f124 - f162 * f125,
            f75 * f162 - f81 * b + f64 * f123,
            f75 * f124 - f81 * f102 - f64 * f125,
            f124 * b - f64 * a - f102 * f162,
            f75 * a - f125 * b - f102 * f123,
        ]
    g41, g42 = p["g4^1"], p["g4^2"]
    f24, f25, f26, f36 = p["f2^4"], p["f2^5"], p["f2^6"], p["f3^6"]
    f42, f63, f64, f65, f86 = p["f4^2"], p["f6^3"], p["f6^4"], p["f6^5"], p["f8^6"]
    a = f86 - X * f36
    b = f26 - f36
    return [
        g41 * a - f63 * f64 - g42 * f65,
        g41 * b + f63 * f24 - g42 * f25,
        g41 * f42 - f64 * f25 - f24 * f65,
        -f24 * a - f64 * b + f42 * g42,
        -f25 * a + f65 * b + f42 * f63,
    ]


def matrix_symbols(family_id: int, tau: int, normalization: Sequence[str] | None = None) -> list[str]:
    m = pfaffian_matrix(family_id, tau, normalization)
    names = set()
    for e in m.upper.values():
        names |= e.variables()
    names.discard("X")
    return sorted(names, key=var_key)


def base_equations(family_id: int, tau: int, normalization: Sequence[str] | None = None) -> list[Polynomial]:
    """The 5*tau equations: X-coefficients of each Pfaffian's remainder."""
    pf = sub_pfaffians(pfaffian_matrix(family_id, tau, normalization))
    d = divisor(family_id, tau, normalization)
    out = []
    for P in pf:
        _, r = P.divmod_monic(d, "X")
        out.extend(r.coeff_of("X", m) for m in range(tau))
    return out


def same_up_to_sign(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> bool:
    """Multiset equality of two polynomial lists, each element up to sign."""
    def canon(p: Polynomial) -> Polynomial:
        if p.is_zero():
            return p
        _, c = p.sorted_terms()[0]
        return -p if c < 0 else p

    return Counter(map(canon, a)) == Counter(map(canon, b))


# -- the quadratic cone ----------------------------------------------------

def quadratic_cone_data(family_id: int, tau: int) -> dict:
    """Quadratic parts of the base equations against the Pfaffians of the
    matrix taken over k[X]/(X^tau)."""
    m = pfaffian_matrix(family_id, tau)
    symbols = matrix_symbols(family_id, tau)
    eqs = base_equations(family_id, tau)
    trunc = m.map(lambda e: e.truncate("X", tau))
    artinian = []
    for P in sub_pfaffians(trunc):
        P = P.truncate("X", tau)
        artinian.extend(P.coeff_of("X", k) for k in range(tau))
    quadratic = [e.part_of_degree(symbols, 2) for e in eqs]
    # the coefficients of the truncated entries, as linear forms
    col = {s: i for i, s in enumerate(symbols)}
    forms = []
    form_weights = []
    for e in trunc.upper.values():
        for k in range(tau):
            c = e.coeff_of("X", k)
            row = [0] * len(symbols)
            for mono, coeff in c.terms.items():
                (name, _), = mono
                row[col[name]] = int(coeff)
            forms.append(row)
            if not c.is_zero():
                form_weights.append(min(c.term_weights(weights(family_id, tau, symbols))))
    sym_w = Counter(symbol_weight(s) for s in symbols)
    rest = sym_w - Counter(form_weights)
    return {
        "symbols": len(symbols),
        "entry_coefficients": len(forms),
        "entry_rank": rank(forms),
        "quadratic_matches": quadratic == artinian,
        "complement_weights": sorted(rest.elements()),
    }


def quadratic_cone_check(tau: int, family_id: int = 1) -> bool:
    d = quadratic_cone_data(family_id, tau)
    return d["quadratic_matches"] and d["entry_rank"] == 10 * tau == d["entry_coefficients"]


# -- the explicit smoothing of family 1 -----------------------------------

def smoothing_forms(tau: int, a, b, c) -> dict[str, Polynomial]:
    A = X ** tau - a
    B = X ** (tau + 1) - b
    C = X ** (tau + 2) - c
    y3, y4, y7, y8 = Y(3), Y(4), Y(7), Y(8)
    return {
        "F6": y3 ** 2 - B * A,
        "F7": y3 * y4 - A * y7,
        "F8": y4 ** 2 - A * y8,
        "F10": y3 * y7 - B * y4,
        "F11": y4 * y7 - y3 * y8,
        "F12": y4 * y8 - C * A,
        "F14": y7 ** 2 - B * y8,
        "F15": y7 * y8 - C * y3,
        "F16": y8 ** 2 - C * y4,
    }


def smoothing_assignment(tau: int, a, b, c, symbols: Sequence[str]) -> dict[str, object]:
    """Zero everything except the constant terms of f_8^(6), f_14^(6), f_15^(6)."""
    keep = {f"f_8_{6 * tau}": a, f"f_14_{6 * tau + 6}": b, f"f_15_{6 * tau + 12}": c}
    return {s: keep.get(s, 0) for s in symbols}


def verify_smoothing_solution(tau: int, a, b, c) -> bool:
    _check(1, tau)
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if 0 in (a, b, c):
        raise CoprimalityFailure("a, b, c must be nonzero")
    A = X ** tau - a
    B = X ** (tau + 1) - b
    C = X ** (tau + 2) - c
    for (n1, p1), (n2, p2) in [(("A", A), ("B", B)), (("A", A), ("C", C)), (("B", B), ("C", C))]:
        if resultant(p1, p2, "X") == 0:
            raise CoprimalityFailure(f"{n1} = {p1} and {n2} = {p2} share a root")

    norm = ALT_NORMALIZATION_1
    symbols = matrix_symbols(1, tau, norm)
    sub = smoothing_assignment(tau, a, b, c, symbols)
    for eq in base_equations(1, tau, norm):
        if not eq.substitute(sub).is_zero():
            return False

    forms = smoothing_forms(tau, a, b, c)
    if smoothing_forms(tau, 0, 0, 0) != initial_forms(1, tau):
        return False
    # the eight syzygies lift with X^(tau+e) replaced by A, B, C
    lifted = syzygies_family1(tau, forms, {0: A, 1: B, 2: C})
    return all(v.is_zero() for _, v in lifted)
