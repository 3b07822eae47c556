import pytest
from hypothesis import strategies as st

from staircase.family import FamilyParams, build_family

EXAMPLE = FamilyParams(5, (72, 18, 12, 8, 2), (3, 5, 8, 35))
EXAMPLE_MU = [55, 41, 40, 37, 36, 43]


@pytest.fixture(scope="session")
def example_params():
    return EXAMPLE


@pytest.fixture(scope="session")
def example_family():
    return build_family(EXAMPLE)


@pytest.fixture(autouse=True)
def _default_ceiling(monkeypatch):
    monkeypatch.delenv("STAIRCASE_MAX_EXP", raising=False)


def monomials(max_exp=10**6, max_size=30, min_size=0):
    pair = st.tuples(st.integers(0, max_exp), st.integers(0, max_exp))
    return st.lists(pair, min_size=min_size, max_size=max_size)


# ---- acceptance summary: one PASS/FAIL line per criterion

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    detail = dict(item.user_properties).get("detail", "")
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria[number] = (title, report.passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, passed, detail = _criteria[number]
        line = f"{'PASS' if passed else 'FAIL'}  C{number} {title}"
        if detail:
            line += f": {detail}"
        terminalreporter.write_line(line)
