"""Seeded random, consistent and perturbed pairwise comparison matrices.

Randomness comes from numpy's PCG64 bit generator (``numpy.random.default_rng``),
whose output stream for a given seed is fixed across platforms.  Entries and
weights are drawn log-uniformly, so ``x`` and ``1/x`` are equally likely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import PairwiseComparisonMatrix, Triad, complete_from_upper
from .errors import BadSpec

DEFAULT_BOUNDS = (1.0 / 9.0, 9.0)
MODES = ("random", "consistent", "perturbed")


def _check_bounds(bounds: Sequence[float]) -> tuple[float, float]:
    lo, hi = (float(b) for b in bounds)
    # lo == hi is accepted and yields a constant draw
    if not (0 < lo <= hi and math.isfinite(hi)):
        raise BadSpec(f"entry bounds must satisfy 0 < lo <= hi < inf, got {bounds!r}")
    return lo, hi


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int = 0
    entry_bounds: tuple[float, float] = DEFAULT_BOUNDS
    mode: str = "random"
    base: PairwiseComparisonMatrix | None = None
    delta: float = 0.0

    def __post_init__(self):
        if self.n < 1:
            raise BadSpec(f"n must be >= 1, got {self.n}")
        _check_bounds(self.entry_bounds)
        if self.mode not in MODES:
            raise BadSpec(f"mode must be one of {MODES}, got {self.mode!r}")
        if not (self.delta >= 0):
            raise BadSpec(f"delta must be >= 0, got {self.delta!r}")
        if self.base is not None and self.base.n != self.n:
            raise BadSpec(f"base matrix is {self.base.n}x{self.base.n}, spec says n={self.n}")


class MatrixGenerator:
    """Stateful source of random matrices; one instance per stream."""

    def __init__(self, seed=0, entry_bounds: Sequence[float] = DEFAULT_BOUNDS):
        self.rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        self.lo, self.hi = _check_bounds(entry_bounds)

    def log_uniform(self, lo: float, hi: float, size=None):
        return np.exp(self.rng.uniform(math.log(lo), math.log(hi), size))

    def _entries(self, size):
        return self.log_uniform(self.lo, self.hi, size)

    def random(self, n: int) -> PairwiseComparisonMatrix:
        return complete_from_upper(n, self._entries(n * (n - 1) // 2))

    def triad(self) -> Triad:
        return Triad(*(float(x) for x in self._entries(3)))

    def consistent(self, n: int) -> PairwiseComparisonMatrix:
        return consistent_from_weights(self._entries(n))

    def perturb(self, A: PairwiseComparisonMatrix, delta: float) -> PairwiseComparisonMatrix:
        if not (delta >= 0):
            raise BadSpec(f"delta must be >= 0, got {delta!r}")
        if delta == 0:
            return A
        upper = np.asarray(A.upper())
        factors = np.exp(self.rng.uniform(-delta, delta, upper.size))
        return complete_from_upper(A.n, upper * factors)

    def permutation(self, n: int) -> tuple[int, ...]:
        return tuple(int(x) + 1 for x in self.rng.permutation(n))

    def size(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return int(self.rng.integers(lo, hi + 1))


def consistent_from_weights(w: Sequence[float]) -> PairwiseComparisonMatrix:
    """The consistent matrix ``a_ij = w_i / w_j`` (lower triangle as exact reciprocals)."""
    w = [float(x) for x in w]
    n = len(w)
    return complete_from_upper(n, [w[i] / w[j] for i in range(n) for j in range(i + 1, n)])


def random_pcm(spec: GenSpec) -> PairwiseComparisonMatrix:
    return MatrixGenerator(spec.seed, spec.entry_bounds).random(spec.n)


def random_consistent(spec: GenSpec) -> PairwiseComparisonMatrix:
    return MatrixGenerator(spec.seed, spec.entry_bounds).consistent(spec.n)


def perturb(A: PairwiseComparisonMatrix, delta: float, seed=0) -> PairwiseComparisonMatrix:
    """Multiply each upper entry by ``exp(u)``, ``u ~ U[-delta, delta]``."""
    return MatrixGenerator(seed).perturb(A, delta)


def generate(spec: GenSpec) -> PairwiseComparisonMatrix:
    """Build the matrix described by ``spec``.

    In ``perturbed`` mode without an explicit base, a consistent base is drawn
    first from the same stream.
    """
    g = MatrixGenerator(spec.seed, spec.entry_bounds)
    if spec.mode == "random":
        return g.random(spec.n)
    if spec.mode == "consistent":
        return g.consistent(spec.n)
    base = spec.base if spec.base is not None else g.consistent(spec.n)
    return g.perturb(base, spec.delta)
