"""Koczkodaj inconsistency index and the triad ratio score.

For a triad ``(t1, t2, t3)`` the ratio score is
``max(t2 / (t1 t3), t1 t3 / t2)`` and the Koczkodaj index is
``min(|1 - t2 / (t1 t3)|, |1 - t1 t3 / t2|)``; both are maximised over the
triads of a matrix.  The two are tied by ``kii = 1 - 1/ratio``.

The index is evaluated straight from its min-of-deviations form rather than
through that identity, so the identity can be checked independently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    MatrixLike,
    Triad,
    TriadLocation,
    as_matrix,
    needs_log_domain,
    triad_index,
    triads,
)
from .errors import DomainError, TooSmall


@dataclass(frozen=True)
class InconsistencyScore:
    kii: float
    ratio_score: float
    log_ratio_score: float
    worst: TriadLocation | None = None


@dataclass(frozen=True)
class TriadDiagnostic:
    location: TriadLocation
    ratio_score: float
    kii_contribution: float


def _log_ratio(t1, t2, t3):
    return np.log(t1) + np.log(t3) - np.log(t2)


def triad_ratio_scores(t1, t2, t3) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised ratio scores and their logarithms.

    Triads whose entries leave ``[1e-12, 1e12]`` are evaluated from logs; their
    ratio score may then be ``inf`` but the log score stays finite.
    """
    t1, t2, t3 = (np.asarray(t, dtype=float) for t in (t1, t2, t3))
    unsafe = needs_log_domain(t1, t2, t3)
    with np.errstate(over="ignore", under="ignore", divide="ignore"):
        r = t1 * t3 / t2
        direct = np.maximum(r, 1.0 / r)
        log_abs = np.abs(_log_ratio(t1, t2, t3))
        value = np.where(unsafe, np.exp(log_abs), direct)
        log_value = np.where(unsafe, log_abs, np.log(direct))
    return value, log_value


def triad_kii(t1, t2, t3) -> np.ndarray:
    """Vectorised per-triad Koczkodaj index, min-of-deviations form."""
    t1, t2, t3 = (np.asarray(t, dtype=float) for t in (t1, t2, t3))
    unsafe = needs_log_domain(t1, t2, t3)
    with np.errstate(over="ignore", under="ignore", divide="ignore", invalid="ignore"):
        direct = np.minimum(np.abs(1.0 - t2 / (t1 * t3)), np.abs(1.0 - (t1 * t3) / t2))
        logged = -np.expm1(-np.abs(_log_ratio(t1, t2, t3)))
    return np.where(unsafe, logged, direct)


def triad_ratio_score(T: Triad | tuple[float, float, float]) -> float:
    t1, t2, t3 = T
    value, _ = triad_ratio_scores(t1, t2, t3)
    return float(value)


def koczkodaj_index(A: MatrixLike) -> InconsistencyScore:
    """Index value, worst ratio score and the (lexicographically first) worst triad."""
    A = as_matrix(A)
    if A.n < 3:
        return InconsistencyScore(kii=0.0, ratio_score=1.0, log_ratio_score=0.0)
    t1, t2, t3 = A.triad_values
    value, log_value = triad_ratio_scores(t1, t2, t3)
    kii = triad_kii(t1, t2, t3)
    w = int(np.argmax(log_value))
    i, j, k = (int(x) + 1 for x in triad_index(A.n)[w])
    worst = TriadLocation(i, j, k, Triad(float(t1[w]), float(t2[w]), float(t3[w])))
    return InconsistencyScore(
        kii=float(np.max(kii)),
        ratio_score=float(value[w]),
        log_ratio_score=float(log_value[w]),
        worst=worst,
    )


def kii_from_ratio(s: float) -> float:
    if not (s >= 1.0):
        raise DomainError(f"ratio score must be >= 1, got {s!r}")
    return 1.0 - 1.0 / s


def ratio_from_kii(v: float) -> float:
    if not (0.0 <= v < 1.0):
        raise DomainError(f"Koczkodaj index must lie in [0, 1), got {v!r}")
    return 1.0 / (1.0 - v)


def per_triad_report(A: MatrixLike) -> list[TriadDiagnostic]:
    A = as_matrix(A)
    if A.n < 3:
        raise TooSmall(f"a {A.n}x{A.n} matrix has no triads")
    t1, t2, t3 = A.triad_values
    value, _ = triad_ratio_scores(t1, t2, t3)
    kii = triad_kii(t1, t2, t3)
    return [
        TriadDiagnostic(loc, float(s), float(c))
        for loc, s, c in zip(triads(A), value, kii)
    ]


def koczkodaj_kii(A: MatrixLike) -> float:
    """Plain ``matrix -> float`` index, the shape expected by :func:`check_ct`."""
    return koczkodaj_index(A).kii
