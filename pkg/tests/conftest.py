import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rootheights import root_system  # noqa: E402

ACCEPTANCE_LINES: list[str] = []

CRITERION_SYSTEMS = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4), ("A", 5),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 3), ("C", 4),
    ("D", 4), ("G", 2), ("F", 4),
]
RANK_LE_4 = [s for s in CRITERION_SYSTEMS if s[1] <= 4]


@pytest.fixture(scope="session")
def systems():
    cache = {}

    def get(family, rank):
        key = (family, rank)
        if key not in cache:
            cache[key] = root_system(family, rank)
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
