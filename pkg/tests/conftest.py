import time

import pytest

from cyclegap.corpus import fixture_corpus, random_corpus

_CRITERIA: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    yield
    item._criterion_elapsed = time.perf_counter() - start


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    number, title = mark.args
    status = "PASS" if rep.passed else "FAIL"
    prev = _CRITERIA.get(number)
    if prev is not None and prev[1] == "FAIL":
        status = "FAIL"
    elapsed = getattr(item, "_criterion_elapsed", 0.0) + (prev[2] if prev else 0.0)
    _CRITERIA[number] = (title, status, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status, elapsed = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}  ({elapsed:.2f} s)")


@pytest.fixture(scope="session")
def small_fixtures():
    return fixture_corpus()


@pytest.fixture(scope="session")
def random_fixtures():
    return random_corpus(50, 36)


@pytest.fixture(scope="session")
def full_corpus(small_fixtures, random_fixtures):
    return list(small_fixtures) + list(random_fixtures)
