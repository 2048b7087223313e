import pytest

from epframe.graph import Graph, TerminalSet, parse_graph


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive acceptance sweeps")


@pytest.fixture
def two_edges():
    """Two disjoint A-edges a1-b1 and a2-b2."""
    return parse_graph("graph undirected\n"
                       "vertex a1 A\nvertex b1 A\nvertex a2 A\nvertex b2 A\n"
                       "edge a1 b1\nedge a2 b2\n")


@pytest.fixture
def wheel():
    """Hub x joined to every vertex of a cycle w0 ... w(spokes-1)."""
    def build(spokes):
        names = ["x"] + ["w{}".format(i) for i in range(spokes)]
        pairs = [(0, i) for i in range(1, spokes + 1)]
        pairs += [(i, i % spokes + 1) for i in range(1, spokes + 1)]
        return Graph(names, pairs)
    return build


@pytest.fixture
def star():
    def build(leaves):
        g = Graph(["c"] + ["l{}".format(i) for i in range(leaves)], [(0, i) for i in range(1, leaves + 1)])
        return g, TerminalSet(tuple(range(1, leaves + 1)))
    return build
