"""Reduce a matrix to a canonical triad ``(1, x, 1)`` with ``x >= 1``.

The pipeline mirrors the uniqueness argument for the Koczkodaj ranking:

1. pick a triad equivalent to the whole matrix (the worst one);
2. rescale it to ``(1, t2/t1^2, t3/t1)``, which leaves the ranking unchanged;
3. move the third entity so the triad becomes ``(1, t2/(t1 t3), 1)``;
4. invert preferences if needed so that the middle entry is at least 1.

Two matrices are then ordered by their middle entries alone.  Each stage is
computed from its closed form, not by chaining the previous stage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    MatrixLike,
    PairwiseComparisonMatrix,
    Triad,
    TriadLocation,
    as_matrix,
    needs_log_domain,
    triad_index,
)
from .errors import DomainError, NonPositiveEntry, TooSmall
from .indices import triad_ratio_scores
from .rankings import CMP_TOL, Ordering


@dataclass(frozen=True)
class CanonicalTrace:
    source: PairwiseComparisonMatrix
    step_red: TriadLocation
    step_si: Triad
    step_hte: Triad
    step_iip: Triad
    canonical_value: float

    def steps(self) -> list[tuple[str, Triad]]:
        return [
            ("RED", self.step_red.triad),
            ("SI", self.step_si),
            ("HTE", self.step_hte),
            ("IIP", self.step_iip),
        ]


def max_inconsistent_triad(A: MatrixLike) -> TriadLocation:
    """Worst triad by ratio score; ties go to the lexicographically first location."""
    A = as_matrix(A)
    if A.n < 3:
        raise TooSmall(f"a {A.n}x{A.n} matrix has no triads")
    t1, t2, t3 = A.triad_values
    _, log_value = triad_ratio_scores(t1, t2, t3)
    w = int(np.argmax(log_value))
    i, j, k = (int(x) + 1 for x in triad_index(A.n)[w])
    return TriadLocation(i, j, k, Triad(float(t1[w]), float(t2[w]), float(t3[w])))


def _canonical_steps(t1: float, t2: float, t3: float) -> tuple[Triad, Triad, Triad, float]:
    if not needs_log_domain(t1, t2, t3):
        y = t2 / (t1 * t3)
        x = max(y, 1.0 / y)
        return Triad(1.0, t2 / (t1 * t1), t3 / t1), Triad(1.0, y, 1.0), Triad(1.0, x, 1.0), x
    l1, l2, l3 = math.log(t1), math.log(t2), math.log(t3)
    try:
        si = Triad(1.0, math.exp(l2 - 2 * l1), math.exp(l3 - l1))
        y = math.exp(l2 - l1 - l3)
        x = math.exp(abs(l2 - l1 - l3))
        return si, Triad(1.0, y, 1.0), Triad(1.0, x, 1.0), x
    except (OverflowError, NonPositiveEntry):
        raise DomainError(f"canonical form of triad {(t1, t2, t3)} is not representable") from None


def _log_canonical_value(A: PairwiseComparisonMatrix) -> float:
    t1, t2, t3 = max_inconsistent_triad(A).triad
    if needs_log_domain(t1, t2, t3):
        return abs(math.log(t2) - math.log(t1) - math.log(t3))
    return math.log(_canonical_steps(t1, t2, t3)[3])


def canonicalize(T: Triad | tuple[float, float, float]) -> CanonicalTrace:
    """Canonical trace of a single triad (its own RED step is the identity)."""
    T = T if isinstance(T, Triad) else Triad(*T)
    si, hte, iip, x = _canonical_steps(*T)
    return CanonicalTrace(T.matrix(), TriadLocation(1, 2, 3, T), si, hte, iip, x)


def reduce_matrix(A: MatrixLike) -> CanonicalTrace:
    A = as_matrix(A)
    loc = max_inconsistent_triad(A)
    si, hte, iip, x = _canonical_steps(*loc.triad)
    return CanonicalTrace(A, loc, si, hte, iip, x)


def canonical_value(A: MatrixLike) -> float:
    return reduce_matrix(A).canonical_value


def compare_via_reduction(A: MatrixLike, B: MatrixLike) -> Ordering:
    """Order two matrices by the middle entries of their canonical triads."""
    d = _log_canonical_value(as_matrix(A)) - _log_canonical_value(as_matrix(B))
    if abs(d) <= CMP_TOL:
        return Ordering.EQUIVALENT
    return Ordering.LESS_INCONSISTENT if d < 0 else Ordering.MORE_INCONSISTENT
