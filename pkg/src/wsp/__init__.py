"""Weierstrass semigroups: invariants, T^1 of monomial curves, moduli bounds and family equations."""
from .bounds import BoundsReport, bounds_report
from .cotangent import t1_table
from .semigroup import NumericalSemigroup, from_gaps, from_generators, ordinary
from .toric import minimal_relations

__version__ = "0.1.0"

__all__ = [
    "BoundsReport", "NumericalSemigroup", "bounds_report", "from_gaps", "from_generators",
    "minimal_relations", "ordinary", "t1_table",
]
