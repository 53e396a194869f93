from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from koczkodaj.core import complete_from_upper

SAATY = [Fraction(k) for k in range(1, 10)] + [Fraction(1, k) for k in range(2, 10)]


@st.composite
def saaty_upper(draw, min_n=3, max_n=6):
    """(n, exact upper entries) drawn from the 1/9..9 integer scale."""
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    return n, draw(st.lists(st.sampled_from(SAATY), min_size=m, max_size=m))


def as_float_matrix(n, upper):
    return complete_from_upper(n, [float(v) for v in upper])


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(i))
