"""Exact numerics for Fano 3-folds with terminal quotient baskets.

Orbifold Riemann-Roch, weighted complete intersection Hilbert series and
family search, Type II link degree bookkeeping, and replayable exclusion
inequalities for maximal centers.
"""

from fanolink.rr import (
    Basket,
    FanoNumerics,
    QuotientSingularity,
    anticanonical_cube,
    genus_from_h0,
    h0_anticanonical,
    local_contribution,
    rr_hilbert_sequence,
)
from fanolink.families import (
    Family,
    WeightSystem,
    family_anticanonical_cube,
    family_hilbert_series,
    fano_index,
    is_well_formed,
    search_candidates,
)

__version__ = "0.1.0"

__all__ = [
    "Basket",
    "FanoNumerics",
    "QuotientSingularity",
    "anticanonical_cube",
    "genus_from_h0",
    "h0_anticanonical",
    "local_contribution",
    "rr_hilbert_sequence",
    "Family",
    "WeightSystem",
    "family_anticanonical_cube",
    "family_hilbert_series",
    "fano_index",
    "is_well_formed",
    "search_candidates",
]
