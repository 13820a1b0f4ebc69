import pytest

from cascade_affect import Grid, Puzzle

ACCEPTANCE_LINES: list[str] = []


def G(rows):
    return Grid.from_values(rows)


@pytest.fixture
def golden_puzzle():
    return Puzzle(G([[1, None, 3], [None, 5], [None]]))


@pytest.fixture
def blank2_puzzle():
    return Puzzle(G([[None, None], [None]]))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
