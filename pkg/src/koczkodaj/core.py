"""Pairwise comparison matrices, triads and structural transforms.

Entity indices in the public API are 1-based, so ``A.a(1, 2)`` is the
comparison of the first entity with the second.  The underlying array in
``A.entries`` is an ordinary 0-based numpy array.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import (
    BadIndices,
    BadPermutation,
    DiagonalViolation,
    NonPositiveEntry,
    NotSquare,
    ReciprocityViolation,
    TooSmall,
    WrongLength,
)

#: default relative tolerance on ``a_ij * a_ji = 1``
RECIPROCITY_TOL = 1e-9

# Triads touching an entry outside [1/LOG_DOMAIN_THRESHOLD, LOG_DOMAIN_THRESHOLD]
# are scored from logarithms so products cannot overflow.
LOG_DOMAIN_THRESHOLD = 1e12


@lru_cache(maxsize=None)
def triad_index(n: int) -> np.ndarray:
    """0-based ``(C(n,3), 3)`` array of all ``i < j < k`` in lexicographic order."""
    if n < 3:
        return np.empty((0, 3), dtype=np.intp)
    idx = np.array(list(combinations(range(n), 3)), dtype=np.intp)
    idx.setflags(write=False)
    return idx


def needs_log_domain(*values) -> np.ndarray | bool:
    """True where any of the given entries is too large or too small to multiply safely."""
    out = False
    for v in values:
        v = np.asarray(v)
        out = out | (v > LOG_DOMAIN_THRESHOLD) | (v < 1.0 / LOG_DOMAIN_THRESHOLD)
    return out


@dataclass(frozen=True, eq=False)
class PairwiseComparisonMatrix:
    """A validated positive reciprocal matrix.

    Build one with :func:`validate_matrix` or :func:`complete_from_upper`;
    the constructor itself performs no checks.
    """

    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def a(self, i: int, j: int) -> float:
        """Entry ``a_ij`` with 1-based indices."""
        return float(self.entries[i - 1, j - 1])

    def upper(self) -> tuple[float, ...]:
        """Upper-triangle entries, row by row."""
        iu = np.triu_indices(self.n, 1)
        return tuple(float(x) for x in self.entries[iu])

    def tolist(self) -> list[list[float]]:
        return self.entries.tolist()

    @cached_property
    def triad_values(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Arrays ``(a_ij, a_ik, a_jk)`` over all triads, lexicographic order."""
        idx = triad_index(self.n)
        e = self.entries
        i, j, k = idx[:, 0], idx[:, 1], idx[:, 2]
        return e[i, j], e[i, k], e[j, k]

    @cached_property
    def log_domain_mask(self) -> np.ndarray:
        """Per-triad flag: score this triad from logarithms."""
        return needs_log_domain(*self.triad_values)

    def __reduce__(self):
        # drop cached per-ranking scores, which hold unpicklable callables
        return (type(self), (self.entries.copy(),))

    def __eq__(self, other):
        if not isinstance(other, PairwiseComparisonMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash(self.entries.tobytes())

    def __repr__(self):
        return f"PairwiseComparisonMatrix({self.tolist()!r})"


@dataclass(frozen=True)
class Triad:
    """Upper triangle ``(t1, t2, t3) = (a_12, a_13, a_23)`` of a 3x3 matrix."""

    t1: float
    t2: float
    t3: float

    def __post_init__(self):
        for pos, v in zip(((1, 2), (1, 3), (2, 3)), (self.t1, self.t2, self.t3)):
            if not (math.isfinite(v) and v > 0):
                raise NonPositiveEntry(*pos, v)

    def __iter__(self):
        return iter((self.t1, self.t2, self.t3))

    def matrix(self) -> PairwiseComparisonMatrix:
        return complete_from_upper(3, (self.t1, self.t2, self.t3))

    @classmethod
    def of(cls, A: PairwiseComparisonMatrix) -> "Triad":
        if A.n != 3:
            raise BadIndices(f"a triad is a 3x3 matrix, got {A.n}x{A.n}")
        return cls(A.a(1, 2), A.a(1, 3), A.a(2, 3))

    def transpose(self) -> "Triad":
        return Triad(1.0 / self.t1, 1.0 / self.t2, 1.0 / self.t3)


@dataclass(frozen=True)
class TriadLocation:
    """A triad of a host matrix together with its 1-based indices ``i < j < k``."""

    i: int
    j: int
    k: int
    triad: Triad

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)


MatrixLike = Union[PairwiseComparisonMatrix, Triad, Sequence[float]]


def as_matrix(x: MatrixLike) -> PairwiseComparisonMatrix:
    """Coerce a matrix, a :class:`Triad` or a bare 3-tuple ``(t1, t2, t3)``."""
    if isinstance(x, PairwiseComparisonMatrix):
        return x
    if isinstance(x, Triad):
        return x.matrix()
    seq = list(x)
    if len(seq) == 3 and all(np.ndim(v) == 0 for v in seq):
        return complete_from_upper(3, seq)
    return validate_matrix(seq)


def validate_matrix(raw, tolerance: float = RECIPROCITY_TOL) -> PairwiseComparisonMatrix:
    """Check ``raw`` is a positive reciprocal square grid and wrap it.

    ``tolerance`` bounds ``|a_ij * a_ji - 1|`` and ``|a_ii - 1|``; pass 0 for an
    exact check.  A pair where one entry is the correctly rounded reciprocal of
    the other counts as exact, since ``v * (1/v)`` need not be 1 in floating point.
    """
    rows = [list(r) for r in raw]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotSquare(f"expected a square grid, got row lengths {[len(r) for r in rows]}")
    try:
        arr = np.array(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise NotSquare(f"grid is not numeric: {exc}") from None

    for i in range(n):
        for j in range(n):
            v = arr[i, j]
            if not (math.isfinite(v) and v > 0):
                raise NonPositiveEntry(i + 1, j + 1, float(v))
    for i in range(n):
        if abs(arr[i, i] - 1.0) > tolerance:
            raise DiagonalViolation(i + 1, float(arr[i, i]))
    for i in range(n):
        for j in range(i + 1, n):
            a, b = arr[i, j], arr[j, i]
            p = a * b
            if abs(p - 1.0) > tolerance and b != 1.0 / a and a != 1.0 / b:
                raise ReciprocityViolation(i + 1, j + 1, float(p))
    return PairwiseComparisonMatrix(arr)


def complete_from_upper(n: int, upper: Iterable[float]) -> PairwiseComparisonMatrix:
    """Build the reciprocal matrix whose upper triangle (row by row) is ``upper``."""
    vals = [float(v) for v in upper]
    if len(vals) != n * (n - 1) // 2:
        raise WrongLength(f"n={n} needs {n * (n - 1) // 2} upper-triangle values, got {len(vals)}")
    arr = np.ones((n, n))
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            v = vals[pos]
            if not (math.isfinite(v) and v > 0):
                raise NonPositiveEntry(i + 1, j + 1, v)
            arr[i, j] = v
            arr[j, i] = 1.0 / v
            pos += 1
    return PairwiseComparisonMatrix(arr)


def triads(A: PairwiseComparisonMatrix) -> list[TriadLocation]:
    if A.n < 3:
        raise TooSmall(f"a {A.n}x{A.n} matrix has no triads")
    t1, t2, t3 = A.triad_values
    return [
        TriadLocation(int(i) + 1, int(j) + 1, int(k) + 1, Triad(float(x), float(y), float(z)))
        for (i, j, k), x, y, z in zip(triad_index(A.n), t1, t2, t3)
    ]


def submatrix(A: PairwiseComparisonMatrix, indices: Sequence[int]) -> PairwiseComparisonMatrix:
    """Proper submatrix on the 1-based, strictly increasing ``indices``."""
    idx = list(indices)
    if not 2 <= len(idx) < A.n:
        raise BadIndices(f"need 2 <= len(indices) < {A.n}, got {len(idx)}")
    if any(b <= a for a, b in zip(idx, idx[1:])) or idx[0] < 1 or idx[-1] > A.n:
        raise BadIndices(f"indices must be strictly increasing within 1..{A.n}: {idx}")
    z = np.array(idx) - 1
    return PairwiseComparisonMatrix(A.entries[np.ix_(z, z)])


def _triad_deviation(t1, t2, t3) -> np.ndarray:
    # |a_ij a_jk / a_ik - 1| per triad
    t1, t2, t3 = (np.asarray(t, dtype=float) for t in (t1, t2, t3))
    with np.errstate(over="ignore", under="ignore"):
        direct = np.abs(t1 * t3 / t2 - 1.0)
        logged = np.abs(np.expm1(np.log(t1) + np.log(t3) - np.log(t2)))
    return np.where(needs_log_domain(t1, t2, t3), logged, direct)


def is_consistent(A: PairwiseComparisonMatrix, tolerance: float = 1e-10) -> bool:
    """Multiplicative transitivity up to ``tolerance``; matrices with n <= 2 are consistent."""
    if A.n < 3:
        return True
    return bool(np.max(_triad_deviation(*A.triad_values)) <= tolerance)


def transpose(A: PairwiseComparisonMatrix) -> PairwiseComparisonMatrix:
    return PairwiseComparisonMatrix(A.entries.T)


def _check_perm(perm: Sequence[int], n: int) -> np.ndarray:
    p = np.asarray(list(perm))
    if p.shape != (n,) or sorted(p.tolist()) != list(range(1, n + 1)):
        raise BadPermutation(f"expected a permutation of 1..{n}, got {list(perm)}")
    return p - 1


def permute(A: PairwiseComparisonMatrix, perm: Sequence[int]) -> PairwiseComparisonMatrix:
    """Move entity ``i`` to position ``perm[i-1]`` (the ``P A P^T`` relabelling).

    With this convention ``permute(permute(A, p), q) == permute(A, compose(q, p))``.
    """
    p = _check_perm(perm, A.n)
    inv = np.argsort(p)
    return PairwiseComparisonMatrix(A.entries[np.ix_(inv, inv)])


def compose(q: Sequence[int], p: Sequence[int]) -> tuple[int, ...]:
    """The permutation ``q o p`` (apply ``p`` first), 1-based."""
    return tuple(int(q[x - 1]) for x in p)


def invert_permutation(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p, start=1):
        inv[x - 1] = i
    return tuple(inv)
