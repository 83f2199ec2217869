"""The two tau-families of symmetric multiplicity-6 semigroups.

Family 1 is <6, 3+6t, 4+6t, 7+6t, 8+6t>, family 2 is <6, 1+6t, 2+6t, 3+6t, 4+6t>.
Each comes with closed forms for genus, Frobenius number, dim T^{1,-} and the
dimension of the moduli space; ``verify_family`` recomputes all of them.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cotangent import t1_table
from .errors import BadFamilyId, TauTooSmall, VerificationFailure
from .semigroup import NumericalSemigroup, from_generators
from .toric import minimal_relations

# residues j in j + 6*tau + 6N, and the offset of the last class c + 12*tau + 6N
_CLASSES = {1: ((3, 4, 7, 8), 11), 2: ((1, 2, 3, 4), 5)}


@dataclass(frozen=True)
class FamilySpec:
    family_id: int
    tau: int
    semigroup: NumericalSemigroup = field(repr=False)
    closed_genus: int
    closed_frobenius: int
    closed_t1_minus: int
    closed_moduli_dim: int
    closed_cone_dim: int | None

    @property
    def generators(self) -> tuple[int, ...]:
        return self.semigroup.min_gens


def family_generators(family_id: int, tau: int) -> list[int]:
    _check(family_id, tau)
    js, _ = _CLASSES[family_id]
    return [6] + [j + 6 * tau for j in js]


def _check(family_id: int, tau: int) -> None:
    if family_id not in (1, 2):
        raise BadFamilyId(f"family id must be 1 or 2, got {family_id}")
    if tau < 1:
        raise TauTooSmall(f"tau must be >= 1, got {tau}")


def family(family_id: int, tau: int) -> FamilySpec:
    gens = family_generators(family_id, tau)
    S = from_generators(gens)
    if family_id == 1:
        return FamilySpec(1, tau, S, 3 + 6 * tau, 12 * tau + 5, 11 * tau + 8, 8 * tau + 7, 8 * tau + 8)
    return FamilySpec(2, tau, S, 6 * tau, 12 * tau - 1, 11 * tau + 4, 8 * tau + 3, 8 * tau + 4)


def decomposition_member(family_id: int, tau: int, n: int) -> bool:
    """Membership read off the disjoint residue-class decomposition."""
    if n < 0:
        return False
    if n % 6 == 0:
        return True
    js, last = _CLASSES[family_id]
    for j in js:
        if n >= j + 6 * tau and (n - j - 6 * tau) % 6 == 0:
            return True
    return n >= last + 12 * tau and (n - last - 12 * tau) % 6 == 0


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def __str__(self) -> str:
        mark = "✓" if self.ok else f"✗ (expected {self.expected})"
        return f"{self.name} = {self.actual} {mark}"


@dataclass
class FamilyVerification:
    spec: FamilySpec
    checks: list[Check]
    t1_plus: int

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.ok), None)


def verify_family(spec: FamilySpec, strict: bool = True) -> FamilyVerification:
    S = spec.semigroup
    tau = spec.tau
    g = S.genus
    rels = minimal_relations(S)
    table = t1_table(S, rels)
    top = S.frobenius + 12 * tau + 20
    decomposition_ok = all(
        decomposition_member(spec.family_id, tau, n) == (n in S) for n in range(top)
    )
    plus_closed = 4 * tau - 2 if spec.family_id == 1 else 4 * tau - 4
    checks = [
        Check("min_gens", tuple(family_generators(spec.family_id, tau)), S.min_gens),
        Check("multiplicity", 6, S.multiplicity),
        Check("genus", spec.closed_genus, g),
        Check("frobenius", spec.closed_frobenius, S.frobenius),
        Check("frobenius = 2g-1", True, S.frobenius == 2 * g - 1),
        Check("symmetric", True, S.is_symmetric()),
        Check("lambda", 1, S.lambda_()),
        Check("relations", 9, len(rels)),
        Check("decomposition", True, decomposition_ok),
        Check("t1_minus", spec.closed_t1_minus, table.t1_minus),
        Check("t1_plus", plus_closed, table.t1_plus),
        Check("2g-1-t1_plus", spec.closed_moduli_dim, 2 * g - 1 - table.t1_plus),
    ]
    if spec.family_id == 1:
        degrees = sorted(r.degree for r in rels)
        checks.append(Check(
            "relation degrees",
            [12 * tau + i for i in (6, 7, 8, 10, 11, 12, 14, 15, 16)],
            degrees,
        ))
    out = FamilyVerification(spec, checks, table.t1_plus)
    bad = out.first_failure()
    if strict and bad is not None:
        raise VerificationFailure(f"family {spec.family_id}, tau={tau}: {bad}")
    return out
