import pytest

from marsbase import Environment, ModelParams


@pytest.fixture
def env():
    return Environment()


@pytest.fixture
def params():
    return ModelParams()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
