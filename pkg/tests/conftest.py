import pytest

import helpers

# Lines recorded by the acceptance suite, echoed in the terminal summary so
# they survive pytest's output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def delta_a():
    return helpers.delta_a()


@pytest.fixture
def delta_b():
    return helpers.delta_b()


@pytest.fixture
def delta_c():
    return helpers.delta_c()


@pytest.fixture
def fan():
    return helpers.fan()
