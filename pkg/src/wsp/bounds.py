"""Dimension bounds for moduli of pointed curves with a given Weierstrass semigroup."""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .cotangent import t1_table, v_dim
from .errors import GenusTooSmall
from .semigroup import NumericalSemigroup
from .toric import minimal_relations


@dataclass(frozen=True)
class BoundsReport:
    genus: int
    lambda_: int
    ewt: int
    wt: int
    t1_plus: int
    t1_minus: int
    pflueger_lower: int
    rv_upper: int
    new_lower: int
    smoothing_dim: int
    negatively_graded: bool
    exact_moduli_dim: int | None

    def as_dict(self) -> dict:
        return asdict(self)


def bounds_report(S: NumericalSemigroup) -> BoundsReport:
    """Pflueger, Rim-Vitulli and T^{1,+} bounds; exact value when it is known.

    ``new_lower`` is reported as computed, negative values included.
    """
    g = S.genus
    if g < 2:
        raise GenusTooSmall(f"{S} has genus {g}; bounds need genus >= 2")
    lam = S.lambda_()
    ewt = S.ewt()
    table = t1_table(S)
    # one branch: mu = 2 delta = 2g, type t = lambda
    smoothing = 2 * g + lam - 1
    exact = None
    if S.is_symmetric() and S.embedding_dimension <= 4:
        exact = table.t1_minus - 1
    return BoundsReport(
        genus=g,
        lambda_=lam,
        ewt=ewt,
        wt=S.wt(),
        t1_plus=table.t1_plus,
        t1_minus=table.t1_minus,
        pflueger_lower=3 * g - 2 - ewt,
        rv_upper=2 * g - 2 + lam,
        new_lower=2 * g - 2 + lam - table.t1_plus,
        smoothing_dim=smoothing,
        negatively_graded=table.t1_plus == 0,
        exact_moduli_dim=exact,
    )


def comparison_sides(S: NumericalSemigroup) -> tuple[int, int]:
    """Both sides of 3g-2-ewt + sum dim V_l = 2g-2+lambda-dim T^{1,+}.

    The sum runs over the positive gaps outside End(N). Each side is
    assembled from its own ingredients.
    """
    g = S.genus
    if g < 1:
        raise GenusTooSmall(f"{S} has genus 0")
    rels = minimal_relations(S)
    end = set(S.end_gaps)
    v_sum = sum(v_dim(S, rels, l) for l in S.gaps if l not in end)
    left = 3 * g - 2 - S.ewt() + v_sum
    right = 2 * g - 2 + S.lambda_() - t1_table(S, rels).t1_plus
    return left, right


def verify_comparison_identity(S: NumericalSemigroup) -> bool:
    left, right = comparison_sides(S)
    return left == right
