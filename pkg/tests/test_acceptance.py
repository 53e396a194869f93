"""Acceptance criteria, each at its stated tolerance.

Every criterion is a function returning ``(ok, detail)``.  Under pytest one
line per criterion is printed in the terminal summary; run this file directly
to print the same lines without pytest.
"""

import itertools
import time

import numpy as np
import pytest

from koczkodaj import axioms as ax
from koczkodaj.core import Triad, complete_from_upper, permute, submatrix, transpose, triads
from koczkodaj.gen import MatrixGenerator
from koczkodaj.indices import koczkodaj_index, koczkodaj_kii, triad_kii, triad_ratio_scores
from koczkodaj.rankings import KOCZKODAJ, Ordering, compare, score
from koczkodaj.reduce import compare_via_reduction, reduce_matrix

RESULTS: dict[int, tuple[bool, str]] = {}
TITLES = {
    1: "independence table pattern",
    2: "index / ratio-score bijection",
    3: "RED exactness",
    4: "MON under proper submatrices",
    5: "reduction agreement and trace preservation",
    6: "consistency detection",
    7: "explicit witnesses",
    8: "PR grid",
    9: "OI and IIP",
}


def _gen(tag: int) -> MatrixGenerator:
    return MatrixGenerator(np.random.default_rng([2024, tag]))


def criterion_1():
    t0 = time.perf_counter()
    table = ax.independence_table(ax.SuiteConfig())
    elapsed = time.perf_counter() - t0
    bad = table.mismatches()
    detail = f"{42 - len(bad)}/42 cells match, {elapsed:.1f}s"
    if bad:
        detail += "; mismatched: " + ", ".join(
            f"({r},{a.value}) expected {'pass' if e else 'violation'} got {'pass' if g else 'violation'}"
            for r, a, e, g in bad
        )
    return not bad and elapsed < 60, detail


def criterion_2():
    g = _gen(2)
    t = g._entries((3, 100_000))
    value, _ = triad_ratio_scores(*t)
    err = float(np.max(np.abs(triad_kii(*t) - (1.0 - 1.0 / value))))
    return err <= 1e-12, f"max |kii - (1 - 1/ratio)| = {err:.3g} over 1e5 triads"


def criterion_3():
    g = _gen(3)
    fails = 0
    for _ in range(1000):
        A = g.random(g.size(3, 7))
        s = koczkodaj_index(A)
        per = [float(triad_kii(*loc.triad)) for loc in triads(A)]
        worst = s.worst.triad.matrix()
        if s.kii != max(per) or compare("koczkodaj", A, worst) is not Ordering.EQUIVALENT:
            fails += 1
    return fails == 0, f"{1000 - fails}/1000 matrices"


def criterion_4():
    g = _gen(4)
    fails = 0
    for _ in range(1000):
        n = g.size(3, 7)
        A = g.random(n)
        m = g.size(2, n - 1)
        idx = tuple(sorted(int(x) + 1 for x in g.rng.choice(n, size=m, replace=False)))
        if not koczkodaj_kii(submatrix(A, idx)) <= koczkodaj_kii(A):
            fails += 1
    return fails == 0, f"{1000 - fails}/1000 (A, submatrix) pairs"


def criterion_5():
    g = _gen(5)
    mism, worst_drift = 0, 0.0
    for _ in range(10_000):
        A, B = g.random(g.size(3, 7)), g.random(g.size(3, 7))
        if compare_via_reduction(A, B) is not KOCZKODAJ.compare(A, B):
            mism += 1
        for M in (A, B):
            tr = reduce_matrix(M)
            ref = koczkodaj_index(M).ratio_score
            for _, T in tr.steps():
                s = float(triad_ratio_scores(*T)[0])
                worst_drift = max(worst_drift, abs(s - ref) / ref)
            worst_drift = max(worst_drift, abs(tr.canonical_value - ref) / ref)
    ok = mism == 0 and worst_drift <= 1e-12
    return ok, f"{mism} ordering mismatches in 1e4 pairs; max relative ratio drift {worst_drift:.3g}"


def criterion_6():
    g = _gen(6)
    worst = max(koczkodaj_kii(g.consistent(g.size(3, 8))) for _ in range(1000))
    ct = ax.check_ct(koczkodaj_kii)
    return worst <= 1e-10 and ct.passed, f"max kii {worst:.3g} on 1000 consistent matrices; check_ct {ct.outcome}"


def criterion_7():
    T111, T121 = complete_from_upper(3, [1, 1, 1]), complete_from_upper(3, [1, 2, 1])
    checks = {
        "r2 (1,1,1) vs (1,2,1) more": compare("r2", T111, T121) is Ordering.MORE_INCONSISTENT,
        "r2 transposes reversed": compare("r2", transpose(T111), transpose(T121)) is Ordering.LESS_INCONSISTENT,
        "r3 (1,3,2) = 4/3": abs(score("r3", (1, 3, 2)) - 4 / 3) <= 1e-15,
        "r3 (1,5,4) = 16/5": abs(score("r3", (1, 5, 4)) - 16 / 5) <= 1e-15,
        "r4 (1,1,1) = 1": score("r4", (1, 1, 1)) == 1.0,
        "r4 (2,4,2) = 2": score("r4", (2, 4, 2)) == 2.0,
    }
    failed = [k for k, v in checks.items() if not v]
    return not failed, "all six hold" if not failed else "failed: " + "; ".join(failed)


def criterion_8():
    grid = [i / 100 for i in range(100, 901)]
    keys = [KOCZKODAJ.key(Triad(1.0, s, 1.0).matrix()) for s in grid]
    bad = 0
    for (s, ks), (t, kt) in itertools.product(zip(grid, keys), repeat=2):
        if KOCZKODAJ.compare_keys(ks, kt).at_most_as_inconsistent != (s <= t):
            bad += 1
    # the fast path must agree with the full comparator
    rng = np.random.default_rng(8)
    spot = 0
    for a, b in rng.integers(0, len(grid), size=(2000, 2)):
        S, T = (1, grid[a], 1), (1, grid[b], 1)
        fwd = compare("koczkodaj", S, T).at_most_as_inconsistent == (grid[a] <= grid[b])
        bwd = compare("koczkodaj", T, S).at_most_as_inconsistent == (grid[b] <= grid[a])
        spot += not (fwd and bwd)
    n = len(grid) ** 2
    return bad == 0 and spot == 0, f"{n - bad}/{n} ordered pairs; {2000 - spot}/2000 direct spot checks"


def criterion_9():
    g = _gen(9)
    oi = iip = 0
    for _ in range(1000):
        A = g.random(g.size(3, 7))
        oi += compare("koczkodaj", permute(A, g.permutation(A.n)), A) is not Ordering.EQUIVALENT
    for _ in range(1000):
        A = g.random(g.size(3, 7))
        iip += compare("koczkodaj", A, transpose(A)) is not Ordering.EQUIVALENT
    return oi == 0 and iip == 0, f"OI {1000 - oi}/1000, IIP {1000 - iip}/1000"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in TITLES}


def line(i: int) -> str:
    ok, detail = RESULTS[i]
    return f"criterion {i} {'PASS' if ok else 'FAIL'}  {TITLES[i]}: {detail}"


@pytest.mark.parametrize("i", list(TITLES), ids=[f"criterion_{i}_{TITLES[i].replace(' ', '_')}" for i in TITLES])
def test_criterion(i):
    RESULTS[i] = CRITERIA[i]()
    print(line(i))
    assert RESULTS[i][0], line(i)


if __name__ == "__main__":
    for i in TITLES:
        RESULTS[i] = CRITERIA[i]()
        print(line(i), flush=True)
