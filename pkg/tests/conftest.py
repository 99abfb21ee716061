from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from tolerances import Quasiorder, Tolerance, Universe
from tolerances.relation import transitive_closure

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def tolerances(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    u = Universe.letters(n)
    rows = [1 << i for i in range(n)]
    for i, j in combinations(range(n), 2):
        if draw(st.booleans()):
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Tolerance(u, rows)


@st.composite
def quasiorders(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    u = Universe.letters(n)
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and draw(st.integers(0, 3)) == 0:
                rows[i] |= 1 << j
    return Quasiorder(u, transitive_closure(rows))


@st.composite
def tolerance_and_subset(draw, max_n=7):
    R = draw(tolerances(max_n=max_n))
    bits = draw(st.integers(0, R.universe.full))
    return R, R.universe.subset(R.universe.labels[i] for i in range(R.n) if bits >> i & 1)



_criteria: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, title = mark.args
    _criteria[number] = (title, "PASS" if rep.passed else "FAIL", rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status, seconds = _criteria[number]
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}  ({seconds:.2f}s)")
