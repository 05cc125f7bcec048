import itertools

import pytest
from hypothesis import strategies as st

from hmshift.setfamily import SetFamily, level_masks

ACCEPTANCE_LINES: list[str] = []


def fam(n, k, *sets):
    return SetFamily.from_sets(n, k, sets)


@st.composite
def families(draw, max_n=7, min_k=1, max_k=4):
    n = draw(st.integers(min_value=max(2, min_k), max_value=max_n))
    k = draw(st.integers(min_value=min_k, max_value=min(max_k, n)))
    level = level_masks(n, k)
    keep = draw(st.lists(st.booleans(), min_size=len(level), max_size=len(level)))
    return SetFamily(n, k, tuple(m for m, b in zip(level, keep) if b))


@st.composite
def shift_pairs(draw, n):
    i = draw(st.integers(min_value=1, max_value=n - 1))
    j = draw(st.integers(min_value=i + 1, max_value=n))
    return i, j


def brute_shadow(fam):
    out = set()
    for s in fam.sets():
        out.update(itertools.combinations(s, len(s) - 1))
    return {frozenset(x) for x in out}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES
