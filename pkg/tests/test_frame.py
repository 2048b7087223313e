from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers, sampled_from

from epframe.frame import (Frame, FrameInvariantError, FrameVariant, NewComponent, SearchBudgetExceeded,
                           check_frame, construct_frame, dump_frame, find_augmentation, frame_stats)
from epframe.graph import Graph, Path, PreconditionError, TerminalSet, parse_graph

from .strategies import instances


def line(length):
    """Path a - x1 - ... - b with both ends in A."""
    names = ["a"] + ["x{}".format(i) for i in range(1, length)] + ["b"]
    return Graph(names, [(i, i + 1) for i in range(length)]), TerminalSet((0, length))


@settings(max_examples=80, deadline=None)
@given(instances(max_vertices=9), sampled_from([FrameVariant(), FrameVariant("long", 2),
                                                 FrameVariant("long", 3), FrameVariant("even")]))
def test_constructed_frames_are_maximal(instance, variant):
    g, A = instance
    frame = construct_frame(g, A, variant)
    check_frame(frame)
    assert find_augmentation(g, A, frame) is None
    stats = frame_stats(frame)
    assert stats.c == len(frame.components())
    assert stats.leaves <= A.as_set
    for leaves, branch in stats.per_component:
        assert leaves - 2 == branch


def test_plain_frame_on_a_star(star):
    g, A = star(3)
    frame = construct_frame(g, A)
    stats = frame_stats(frame)
    assert (stats.c, stats.a_count, sorted(stats.U)) == (1, 3, [0])


@pytest.mark.parametrize("length, ell, expected", [(3, 3, 1), (3, 4, 0), (1, 1, 1)])
def test_long_frame_needs_long_paths(length, ell, expected):
    g, A = line(length)
    assert frame_stats(construct_frame(g, A, FrameVariant("long", ell))).c == expected


@pytest.mark.parametrize("length, expected", [(2, 1), (1, 0), (3, 0), (4, 1)])
def test_even_frame_keeps_witnesses(length, expected):
    g, A = line(length)
    frame = construct_frame(g, A, FrameVariant("even"))
    assert len(frame.components()) == expected
    for cell in frame.components():
        assert frame.witness(cell).length % 2 == 0


def test_long_attachment_respects_leaf_distance():
    # spine a - x - y - b, third terminal c hangs off x
    g, A, _, _ = parse_graph("graph undirected\nvertex a A\nvertex x\nvertex y\nvertex b A\nvertex c A\n"
                             "edge a x\nedge x y\nedge y b\nedge c x\n")
    assert frame_stats(construct_frame(g, A, FrameVariant("long", 3))).a_count == 2
    assert frame_stats(construct_frame(g, A, FrameVariant("long", 2))).a_count == 3


def test_frames_reject_directed_and_looped_graphs():
    with pytest.raises(PreconditionError):
        construct_frame(Graph(["a", "b"], [(0, 1)], directed=True), TerminalSet((0, 1)))
    with pytest.raises(PreconditionError):
        construct_frame(Graph(["a", "b"], [(0, 1), (0, 0)]), TerminalSet((0, 1)))


def test_check_frame_flags_non_terminal_leaf():
    g = Graph(["a", "x"], [(0, 1)])
    frame = Frame(g, TerminalSet((0,)), FrameVariant())
    frame.add_path(NewComponent(Path((0, 1), (0,))))
    with pytest.raises(FrameInvariantError):
        check_frame(frame)


def test_variant_mismatch():
    g, A = line(2)
    frame = construct_frame(g, A)
    with pytest.raises(PreconditionError):
        find_augmentation(g, A, frame, FrameVariant("even"))


def test_even_search_budget_is_enforced():
    # K6 with two pendant terminals forces the depth-first search to wander
    names = ["a", "b"] + ["k{}".format(i) for i in range(6)]
    pairs = [(0, 2), (1, 7)] + [(i, j) for i in range(2, 8) for j in range(i + 1, 8)]
    g = Graph(names, pairs)
    with pytest.raises(SearchBudgetExceeded):
        construct_frame(g, TerminalSet((0, 1)), FrameVariant("even"), budget=3)


@given(integers(1, 6))
def test_dump_frame_header(length):
    g, A = line(length)
    text = dump_frame(g, A, construct_frame(g, A))
    assert text.startswith("# frame variant=plain c=1 a_count=2 U=0\ngraph undirected\n")
    assert text.count("\nedge ") == length


def _admits_new_component(variant, length):
    if variant.tag == "long":
        return length >= variant.ell
    if variant.tag == "even":
        return length % 2 == 0
    return True


def extending_paths(g, A, frame):
    """Every path networkx finds that a frame of this variant could still absorb."""
    variant, inside = frame.variant, frame.vertices
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from((e.u, e.v) for e in g.edges)
    forest = nx.Graph()
    forest.add_edges_from((g.edge(eid).u, g.edge(eid).v) for eid in frame.edges)
    free = [a for a in A if a not in inside]
    for a, b in combinations(free, 2):
        rest = h.subgraph(v for v in h if v not in inside and (v not in A or v in (a, b)))
        for p in nx.all_simple_paths(rest, a, b):
            if _admits_new_component(variant, len(p) - 1):
                yield p
    for v in sorted(inside):
        if forest.degree(v) != 2:
            continue
        dist = nx.single_source_shortest_path_length(forest, v)
        nearest_leaf = min(d for x, d in dist.items() if forest.degree(x) == 1)
        for a in free:
            rest = h.subgraph(u for u in h if u in (a, v) or (u not in inside and u not in A))
            for p in nx.all_simple_paths(rest, a, v):
                if variant.tag != "long" or len(p) - 1 + nearest_leaf >= variant.ell:
                    yield p


@settings(max_examples=120, deadline=None)
@given(instances(max_vertices=12, max_edges=16), sampled_from([FrameVariant(), FrameVariant("long", 2),
                                                                FrameVariant("long", 3), FrameVariant("even")]))
def test_no_path_extends_a_constructed_frame(instance, variant):
    g, A = instance
    frame = construct_frame(g, A, variant)
    assert next(extending_paths(g, A, frame), None) is None


def test_extending_paths_sees_a_missing_attachment(star):
    g, A = star(3)
    frame = Frame(g, A, FrameVariant())
    frame.add_path(NewComponent(Path((1, 0, 2), (0, 1))))
    assert next(extending_paths(g, A, frame)) == [3, 0]
