from __future__ import annotations

import pytest

from splicegenus.cli import bundled_table, load_records
from splicegenus.diagram import PlanarDiagram, parse_pd
from splicegenus.generate import connected_sum, torus_link

HOPF = "X[1,3,2,4] X[3,1,4,2]"
TREFOIL = "X[3,6,4,1] X[5,2,6,3] X[1,4,2,5]"
FIG8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
# 7-crossing prime alternating knot whose maximizing states are all Seifert states
NEG7 = (
    "X[14,7,1,8] X[6,11,7,12] X[4,13,5,14] X[12,5,13,6] "
    "X[8,3,9,4] X[2,9,3,10] X[10,1,11,2]"
)

ACCEPTANCE_LINES: list[str] = []


def kinks(k: int) -> PlanarDiagram:
    """An unknot diagram with ``k`` kinks in a row."""
    return parse_pd(" ".join(f"X[{k + i},{k + i},{i % k + 1},{i}]" for i in range(1, k + 1)))


def hopf_sum_negative() -> PlanarDiagram:
    """Hopf link with the negative 7-crossing knot tied into one component."""
    return connected_sum(torus_link(2), 1, parse_pd(NEG7), 1)


@pytest.fixture(scope="session")
def table():
    records, errors = load_records(bundled_table())
    assert not errors
    return records


@pytest.fixture
def hopf() -> PlanarDiagram:
    return parse_pd(HOPF)


@pytest.fixture
def trefoil() -> PlanarDiagram:
    return parse_pd(TREFOIL)


@pytest.fixture
def fig8() -> PlanarDiagram:
    return parse_pd(FIG8)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
