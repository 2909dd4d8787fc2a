import pytest

from symtriple import catalog


@pytest.fixture(scope="session")
def triples():
    """Every catalog triple, built once per session."""
    return {key: catalog.build(key) for key in catalog.triple_keys()}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


_CRITERIA = {}


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, text = mark.args
    failed = call.excinfo is not None
    prev = _CRITERIA.get(number, (text, False))
    _CRITERIA[number] = (text, prev[1] or failed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        text, failed = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'FAIL' if failed else 'PASS'}  {text}")
