from pathlib import Path

import pytest

import logchern

FIXTURES = Path(logchern.__file__).parent / "fixtures"


@pytest.fixture
def fixture_path():
    def get(name):
        return FIXTURES / f"{name}.json"
    return get


ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion.

    The test body yields to the fixture; failure is whatever pytest reports.
    """
    number, title = request.node.get_closest_marker("criterion").args
    yield
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    # a criterion may span several tests; all of them must pass
    ACCEPTANCE[number] = (title, ACCEPTANCE.get(number, (title, True))[1] and ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
