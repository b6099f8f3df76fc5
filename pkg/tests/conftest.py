import pytest

from fscode.folded import params_new

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def sim_code():
    """The q=2, m=9, h=3, n_t=3, k=4, s=2 code used for the simulations."""
    return params_new(2, 9, 3, 3, 4, 2)


@pytest.fixture(scope="session")
def tiny():
    return params_new(2, 4, 2, 2, 2, 1)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
