import random

import pytest

from sturmian import BlockTable, DirectiveSequence

FIBONACCI = ":1"
TABLE2_ALPHA = "1,3,2,2:2"
MIXED = "2,1:3"


def random_directives(count, seed=20240611):
    """Eventually periodic sequences: head length <= 4, cycle length 1..3, terms 1..4."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        head = tuple(rng.randint(1, 4) for _ in range(rng.randint(0, 4)))
        cycle = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 3)))
        out.append(str(DirectiveSequence(head, cycle)))
    return out


SWEEP_ALPHAS = [FIBONACCI, TABLE2_ALPHA, MIXED] + random_directives(20)


@pytest.fixture
def fib():
    return BlockTable(FIBONACCI)


@pytest.fixture
def table2():
    return BlockTable(TABLE2_ALPHA)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
