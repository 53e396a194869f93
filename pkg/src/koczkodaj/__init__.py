"""Koczkodaj inconsistency index and ranking, with executable axiom checks."""

from .core import (
    PairwiseComparisonMatrix,
    Triad,
    TriadLocation,
    as_matrix,
    complete_from_upper,
    is_consistent,
    permute,
    submatrix,
    transpose,
    triads,
    validate_matrix,
)
from .indices import (
    InconsistencyScore,
    TriadDiagnostic,
    kii_from_ratio,
    koczkodaj_index,
    per_triad_report,
    ratio_from_kii,
    triad_ratio_score,
)
from .rankings import RANKINGS, Ordering, RankingComparator, compare, get_ranking, score
from .reduce import CanonicalTrace, canonicalize, compare_via_reduction, max_inconsistent_triad, reduce_matrix

__all__ = [
    "PairwiseComparisonMatrix",
    "Triad",
    "TriadLocation",
    "as_matrix",
    "complete_from_upper",
    "is_consistent",
    "permute",
    "submatrix",
    "transpose",
    "triads",
    "validate_matrix",
    "InconsistencyScore",
    "TriadDiagnostic",
    "kii_from_ratio",
    "koczkodaj_index",
    "per_triad_report",
    "ratio_from_kii",
    "triad_ratio_score",
    "RANKINGS",
    "Ordering",
    "RankingComparator",
    "compare",
    "get_ranking",
    "score",
    "CanonicalTrace",
    "canonicalize",
    "compare_via_reduction",
    "max_inconsistent_triad",
    "reduce_matrix",
]
