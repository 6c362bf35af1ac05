import pytest
from hypothesis import strategies as st

from wklab.generators import graph_from_code, vertex_pairs
from wklab.graph import complete_graph, cycle_graph, path_graph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << len(vertex_pairs(n))) - 1))
    return graph_from_code(n, code)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def k2():
    return complete_graph(2)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
