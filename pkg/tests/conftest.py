import pytest

_ACCEPTANCE: dict[int, str] = {}


@pytest.fixture(scope="session")
def census():
    from irrbase.census import run_census
    return run_census()


@pytest.fixture(scope="session")
def acceptance_log():
    """Criterion number -> one PASS/FAIL line, echoed in the terminal summary."""
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[n])
