import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from oracles import census  # noqa: E402
from skeinlab.notation import parse_notation  # noqa: E402

LEFT_TREFOIL = "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]"
RIGHT_TREFOIL = "braid:2|1 1 1"


@pytest.fixture(scope="session")
def census_rows():
    return census()


@pytest.fixture(scope="session")
def census_diagrams(census_rows):
    return [(row, parse_notation(row["notation"])) for row in census_rows]


@pytest.fixture
def left_trefoil():
    return parse_notation(LEFT_TREFOIL)


@pytest.fixture
def right_trefoil():
    return parse_notation(RIGHT_TREFOIL)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
