import networkx as nx
import pytest
from hypothesis import strategies as st

from walkshift import MultiGraph, Walk
from walkshift.families import cycle_graph, family, path_graph

# One line per acceptance criterion, printed again in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def walk(g: MultiGraph, *vs: int) -> Walk:
    return Walk.from_vertices(g, vs)


def to_nx(g: MultiGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(g.vertices)
    for e, (a, b) in g.edges.items():
        h.add_edge(a, b, key=e)
    return h


def simple_graphs(max_n=6):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        return MultiGraph.from_edge_list(n, chosen)
    return build()


def multigraphs(max_n=5):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=9))
        return MultiGraph.from_edge_list(n, pairs)
    return build()


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def k4():
    return family("complete", 4)


@pytest.fixture
def w6():
    return family("wheel", 6)


@pytest.fixture
def triangle():
    return family("complete", 3)
