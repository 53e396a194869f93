"""Registry of inconsistency rankings.

Each ranking reduces a matrix to a scalar built from one per-triad quantity,
aggregated by ``max`` or ``min`` over the triads ``i < j < k``:

==========  =====================================  =========  ==============
id          per-triad quantity                     aggregate  order
==========  =====================================  =========  ==============
koczkodaj   max(a_ij a_jk / a_ik, inverse)         max        lower is better
r1          max(a_ij a_jk / a_ik, inverse)         min        higher is better
r2          a_ij a_jk / a_ik                       max        lower is better
r3          max(a_jk^2 / a_ik, inverse)            max        lower is better
r4          max(a_jk / a_ik, inverse)              max        lower is better
r5          max(a_ij a_jk / a_ik, inverse)         min        lower is better
r6          koczkodaj score raised to the power n  max        lower is better
==========  =====================================  =========  ==============

Comparisons are made on log scores: two matrices are equivalent when their
log comparands differ by at most :data:`CMP_TOL` (for r6 the comparand is
``n * log(score)``, so ``score ** n`` is never formed).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Union

import numpy as np

from .core import MatrixLike, PairwiseComparisonMatrix, as_matrix
from .errors import TooSmall, UnknownRanking

CMP_TOL = 1e-9


class Ordering(enum.Enum):
    """Outcome of ``compare(A, B)`` from A's point of view."""

    LESS_INCONSISTENT = "less"  # A strictly better than B
    EQUIVALENT = "equivalent"
    MORE_INCONSISTENT = "more"

    def reverse(self) -> "Ordering":
        return _REVERSED[self]

    @property
    def at_most_as_inconsistent(self) -> bool:
        """Whether ``A >= B`` holds in the ranking sense (A no worse than B)."""
        return self is not Ordering.MORE_INCONSISTENT


_REVERSED = {
    Ordering.LESS_INCONSISTENT: Ordering.MORE_INCONSISTENT,
    Ordering.EQUIVALENT: Ordering.EQUIVALENT,
    Ordering.MORE_INCONSISTENT: Ordering.LESS_INCONSISTENT,
}

# (t1, t2, t3) arrays -> per-triad quantity, and the same from log entries
TriadFn = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


def _symmetrize(x):
    return np.maximum(x, 1.0 / x)


@dataclass(frozen=True)
class RankingComparator:
    """A score-induced total preorder on pairwise comparison matrices.

    ``direct`` and ``logged`` compute the same per-triad quantity, from raw
    entries and from their logarithms; the log form is only used for triads
    with extreme entries.  With ``symmetric`` set, the quantity is replaced by
    ``max(q, 1/q)``.
    """

    id: str
    description: str
    direct: TriadFn
    logged: TriadFn
    symmetric: bool = True
    aggregate: str = "max"
    higher_is_better: bool = False
    size_power: bool = False
    allow_small: bool = False

    def triad_scores(self, A: PairwiseComparisonMatrix) -> tuple[np.ndarray, np.ndarray]:
        """Per-triad scores and log scores of ``A``, lexicographic order.

        Entry ``t`` equals ``score`` of that triad taken as a 3x3 matrix.
        Results are memoised on the (immutable) matrix.
        """
        cache = A.__dict__.setdefault("_ranking_scores", {})
        hit = cache.get(self)
        if hit is None:
            hit = cache[self] = self._triad_scores(A)
        return hit

    def _triad_scores(self, A: PairwiseComparisonMatrix) -> tuple[np.ndarray, np.ndarray]:
        t1, t2, t3 = A.triad_values
        unsafe = A.log_domain_mask
        with np.errstate(over="ignore", under="ignore", divide="ignore", invalid="ignore"):
            d = self.direct(t1, t2, t3)
            lg = self.logged(np.log(t1), np.log(t2), np.log(t3))
            if self.symmetric:
                d, lg = _symmetrize(d), np.abs(lg)
            value = np.where(unsafe, np.exp(lg), d)
            log_value = np.where(unsafe, lg, np.log(d))
        return value, log_value

    def _check_size(self, A: PairwiseComparisonMatrix) -> bool:
        if A.n >= 3:
            return True
        if self.allow_small:
            return False
        raise TooSmall(f"ranking {self.id} needs n >= 3, got {A.n}")

    def _pick(self, log_value: np.ndarray) -> int:
        return int(np.argmax(log_value) if self.aggregate == "max" else np.argmin(log_value))

    def score(self, A: MatrixLike) -> float:
        """The aggregated per-triad quantity (before any power of n for r6)."""
        A = as_matrix(A)
        if not self._check_size(A):
            return 1.0
        value, log_value = self.triad_scores(A)
        return float(value[self._pick(log_value)])

    def log_score(self, A: MatrixLike) -> float:
        A = as_matrix(A)
        if not self._check_size(A):
            return 0.0
        _, log_value = self.triad_scores(A)
        return float(log_value[self._pick(log_value)])

    def _orient(self, log_score: float, n: int) -> float:
        k = n * log_score if self.size_power else log_score
        return -k if self.higher_is_better else k

    def key(self, A: MatrixLike) -> float:
        """Comparand oriented so that a larger key means more inconsistent."""
        A = as_matrix(A)
        return self._orient(self.log_score(A), A.n)

    def triad_keys(self, A: PairwiseComparisonMatrix) -> np.ndarray:
        """``key`` of every triad of ``A``, each taken as a standalone 3x3 matrix."""
        self._check_size(A)
        _, log_value = self.triad_scores(A)
        return np.array([self._orient(float(x), 3) for x in log_value])

    @staticmethod
    def compare_keys(ka: float, kb: float) -> Ordering:
        if abs(ka - kb) <= CMP_TOL:
            return Ordering.EQUIVALENT
        return Ordering.LESS_INCONSISTENT if ka < kb else Ordering.MORE_INCONSISTENT

    def compare(self, A: MatrixLike, B: MatrixLike) -> Ordering:
        return self.compare_keys(self.key(A), self.key(B))


KOCZKODAJ = RankingComparator(
    "koczkodaj",
    "worst triad ratio max(a_ij a_jk / a_ik, a_ik / (a_ij a_jk)), lower is better",
    direct=lambda t1, t2, t3: t1 * t3 / t2,
    logged=lambda l1, l2, l3: l1 + l3 - l2,
    allow_small=True,
)

R1 = RankingComparator(
    "r1",
    "best triad ratio, higher is better (reverses the triad order)",
    direct=KOCZKODAJ.direct,
    logged=KOCZKODAJ.logged,
    aggregate="min",
    higher_is_better=True,
)

R2 = RankingComparator(
    "r2",
    "max of a_ij a_jk / a_ik without symmetrisation",
    direct=KOCZKODAJ.direct,
    logged=KOCZKODAJ.logged,
    symmetric=False,
)

R3 = RankingComparator(
    "r3",
    "worst max(a_jk^2 / a_ik, a_ik / a_jk^2)",
    direct=lambda t1, t2, t3: t3 * t3 / t2,
    logged=lambda l1, l2, l3: 2.0 * l3 - l2,
)

R4 = RankingComparator(
    "r4",
    "worst max(a_jk / a_ik, a_ik / a_jk)",
    direct=lambda t1, t2, t3: t3 / t2,
    logged=lambda l1, l2, l3: l3 - l2,
)

R5 = RankingComparator(
    "r5",
    "best triad ratio, lower is better",
    direct=KOCZKODAJ.direct,
    logged=KOCZKODAJ.logged,
    aggregate="min",
)

R6 = RankingComparator(
    "r6",
    "koczkodaj score to the power of the matrix size",
    direct=KOCZKODAJ.direct,
    logged=KOCZKODAJ.logged,
    size_power=True,
)

RANKINGS = MappingProxyType({r.id: r for r in (KOCZKODAJ, R1, R2, R3, R4, R5, R6)})
RANKING_IDS = tuple(RANKINGS)

RankingRef = Union[str, RankingComparator]


def get_ranking(ranking: RankingRef) -> RankingComparator:
    if isinstance(ranking, RankingComparator):
        return ranking
    try:
        return RANKINGS[ranking]
    except KeyError:
        raise UnknownRanking(f"unknown ranking {ranking!r}; expected one of {', '.join(RANKING_IDS)}") from None


def score(ranking: RankingRef, A: MatrixLike) -> float:
    return get_ranking(ranking).score(A)


def compare(ranking: RankingRef, A: MatrixLike, B: MatrixLike) -> Ordering:
    return get_ranking(ranking).compare(A, B)
