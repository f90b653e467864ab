import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kgcoulomb.constants import PION_MASS, make_system  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def pion68():
    return make_system(68, PION_MASS)


@pytest.fixture(scope="session")
def hydrogen():
    return make_system(1, 1)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
