import pytest
from hypothesis import assume, given, settings

from epframe.extract import (Cycle, ExtractionError, Tree, even_component_paths, hub_even_cycles,
                             leaf_pair_paths, tree_edge_disjoint_apaths, validate_cycle)
from epframe.graph import Graph, InvalidPathError, TerminalSet, validate_path
from epframe.labeling import PathSpec
from epframe.oracle import max_disjoint

from .strategies import trees


def assert_vertex_disjoint(paths):
    seen = set()
    for p in paths:
        assert not seen & set(p.vertices)
        seen |= set(p.vertices)


@settings(max_examples=150, deadline=None)
@given(trees(max_vertices=24, subcubic=True))
def test_leaf_pair_paths_pairs_up_leaves(instance):
    g, _ = instance
    t = Tree.from_graph(g)
    leaves = set(t.leaves())
    paths = leaf_pair_paths(t)
    assert len(paths) == len(leaves) // 2
    assert_vertex_disjoint(paths)
    for p in paths:
        validate_path(g, p)
        assert p.first in leaves and p.last in leaves


def test_leaf_pair_paths_rejects_degree_four(star):
    g, _ = star(4)
    with pytest.raises(ExtractionError):
        leaf_pair_paths(Tree.from_graph(g))


def test_tree_check_rejects_cycles():
    g = Graph(["a", "b", "c"], [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(ExtractionError):
        Tree.from_graph(g).check()


@settings(max_examples=150, deadline=None)
@given(trees(max_vertices=16))
def test_tree_edge_disjoint_apaths(instance):
    g, A = instance
    assume(len(A) >= 2)
    paths = tree_edge_disjoint_apaths(Tree.from_graph(g), A)
    best, _ = max_disjoint(g, A, None, None, PathSpec("plain", disjointness="edge"))
    assert len(A) // 2 <= len(paths) <= best
    used = set()
    for p in paths:
        validate_path(g, p)
        assert p.length >= 1
        assert p.first in A and p.last in A
        assert not any(v in A for v in p.interior)
        assert not used & set(p.edges)
        used |= set(p.edges)


def test_tree_edge_disjoint_apaths_needs_two_terminals(star):
    g, _ = star(3)
    with pytest.raises(ExtractionError):
        tree_edge_disjoint_apaths(Tree.from_graph(g), TerminalSet((1,)))


@settings(max_examples=100, deadline=None)
@given(trees(max_vertices=20, subcubic=True))
def test_even_component_paths_have_even_length(instance):
    g, _ = instance
    t = Tree.from_graph(g)
    A = TerminalSet(tuple(t.leaves()))
    paths = even_component_paths(t, A)
    assert_vertex_disjoint(paths)
    side = t.bipartition()
    larger = max(sum(1 for v in A if side[v] == s) for s in (0, 1))
    assert len(paths) == larger // 2
    for p in paths:
        validate_path(g, p)
        assert p.length % 2 == 0 and p.length > 0
        assert p.first in A and p.last in A


def test_even_component_paths_need_leaf_terminals():
    g = Graph(["a", "b", "c"], [(0, 1), (1, 2)])
    with pytest.raises(ExtractionError):
        even_component_paths(Tree.from_graph(g), TerminalSet((1,)))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_hub_even_cycles_on_wheels(wheel, k):
    g = wheel(6 * k)
    cycles = hub_even_cycles(g, 0, k)
    assert len(cycles) == k
    used = set()
    for c in cycles:
        validate_cycle(g, c)
        assert c.length % 2 == 0
        assert not used & set(c.edges)
        used |= set(c.edges)


def test_hub_even_cycles_one_per_component():
    # hub x joined to every vertex of two disjoint 6-vertex paths
    names = ["x"] + ["p{}".format(i) for i in range(12)]
    pairs = [(0, i) for i in range(1, 13)]
    pairs += [(i, i + 1) for i in range(1, 6)] + [(i, i + 1) for i in range(7, 12)]
    g = Graph(names, pairs)
    cycles = hub_even_cycles(g, 0, 2)
    assert len(cycles) == 2
    halves = [set(range(1, 7)), set(range(7, 13))]
    for c, half in zip(cycles, halves):
        validate_cycle(g, c)
        assert c.length % 2 == 0
        assert set(c.vertices) - {0} <= half


def test_hub_even_cycles_over_parallel_edges():
    g = Graph(["x", "y"], [(0, 1)] * 6)
    (c,) = hub_even_cycles(g, 0, 1)
    validate_cycle(g, c)
    assert c.length == 2


def test_hub_even_cycles_needs_degree(wheel):
    with pytest.raises(ExtractionError):
        hub_even_cycles(wheel(5), 0, 1)


def test_validate_cycle():
    g = Graph(["a", "b", "c"], [(0, 1), (1, 2), (2, 0)])
    validate_cycle(g, Cycle((0, 1, 2), (0, 1, 2)))
    with pytest.raises(InvalidPathError):
        validate_cycle(g, Cycle((0, 1, 2), (0, 2, 1)))
