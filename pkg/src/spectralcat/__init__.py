"""Desk-scale kernel for spectral categories.

Finite simplicial sets, level-truncated symmetric spectra, categories
enriched in a pluggable monoidal value category, pushouts of enriched
categories by a staged non-additive filtration, free categories on graphs
with unique path factorization, and a bounded small-object-argument
approximation of the fibrant-replacement Q-functor.  Undecidable
equivalence notions are replaced throughout by decidable surrogates
(integral homology, connected components, horn-lifting tests).
"""

from .errors import (
    BudgetExceededError,
    FormatError,
    StageExceededError,
    TruncationError,
)

__all__ = [
    "BudgetExceededError",
    "FormatError",
    "StageExceededError",
    "TruncationError",
]
