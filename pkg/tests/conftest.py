import pytest

from npythag.critical import clear_ncrit_cache

# filled by test_acceptance.py, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture
def fresh_cache():
    clear_ncrit_cache()
    yield
    clear_ncrit_cache()
