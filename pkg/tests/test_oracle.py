from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from epframe.epsolve import Certificate
from epframe.gallery import gen_clique_a, gen_long_lb
from epframe.graph import Graph, Path, PreconditionError, TerminalSet, parse_graph
from epframe.labeling import PathSpec
from epframe.oracle import (Budget, OracleBudgetExceeded, elementary_comb, enumerate_paths, is_comb,
                            max_disjoint, min_hitting_set, verify_certificate)

from .strategies import instances


def networkx_apath_count(g, A):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from((e.u, e.v) for e in g.edges)
    count = 0
    for a, b in combinations(sorted(A), 2):
        rest = h.subgraph(v for v in h if v not in A or v in (a, b))
        count += sum(1 for _ in nx.all_simple_paths(rest, a, b))
    return count


@settings(max_examples=80, deadline=None)
@given(instances(max_vertices=8))
def test_plain_enumeration_matches_networkx(instance):
    g, A = instance
    paths = enumerate_paths(g, A, None, None, PathSpec("plain"))
    assert len(paths) == networkx_apath_count(g, A)
    assert len({p.vertices for p in paths}) == len(paths)


def test_clique_packing_and_covering():
    instance = gen_clique_a(3)
    g, A = instance.graph, instance.A
    value, family = max_disjoint(g, A, None, None, PathSpec("plain"))
    assert value == 2 == len(family)
    assert len(min_hitting_set(g, A, None, None, PathSpec("plain"))) == 4


@pytest.mark.parametrize("text", ["long:4", "even"])
def test_long_lower_bound_family(text):
    instance = gen_long_lb(2, 4)
    g, A, spec = instance.graph, instance.A, PathSpec.parse(text)
    value, _ = max_disjoint(g, A, None, None, spec)
    assert value == 1
    assert len(min_hitting_set(g, A, None, None, spec)) == 3


def test_packing_respects_limit():
    instance = gen_clique_a(3)
    value, family = max_disjoint(instance.graph, instance.A, None, None, PathSpec("plain"), limit=1)
    assert value == 1 == len(family)


def test_cap_below_optimum_gives_none():
    instance = gen_clique_a(3)
    assert min_hitting_set(instance.graph, instance.A, None, None, PathSpec("plain"), cap=3) is None


def test_edge_hitting_set_over_parallel_edges():
    g = Graph(["a", "b"], [(0, 1), (0, 1)])
    A = TerminalSet((0, 1))
    assert min_hitting_set(g, A, None, None, PathSpec("plain"), mode="edge") == frozenset({0, 1})
    assert max_disjoint(g, A, None, None, PathSpec("plain", disjointness="edge"))[0] == 2


def test_no_target_paths_need_no_hitting_set(star):
    g, _ = star(3)
    assert min_hitting_set(g, TerminalSet((1,)), None, None, PathSpec("plain")) == frozenset()


def test_vertex_cap_is_enforced():
    g = Graph(["v{}".format(i) for i in range(21)], [(i, i + 1) for i in range(20)])
    with pytest.raises(OracleBudgetExceeded):
        enumerate_paths(g, TerminalSet((0, 20)), None, None, PathSpec("plain"))
    lifted = Budget(max_vertices=None)
    assert len(enumerate_paths(g, TerminalSet((0, 20)), None, None, PathSpec("plain"), lifted)) == 1


def test_node_budget_is_enforced():
    instance = gen_clique_a(4)
    with pytest.raises(OracleBudgetExceeded):
        max_disjoint(instance.graph, instance.A, None, None, PathSpec("plain"), budget=Budget(max_nodes=2))


@pytest.mark.parametrize("value", ["0", "-4", "many", None])
def test_bad_budget_values(value):
    with pytest.raises(PreconditionError):
        Budget.from_nodes(value)


def test_budget_from_environment(monkeypatch):
    monkeypatch.delenv("EPFRAME_BUDGET", raising=False)
    assert Budget.from_environment() == Budget()
    monkeypatch.setenv("EPFRAME_BUDGET", "500")
    assert Budget.from_environment() == Budget(max_vertices=None, max_nodes=500)


def test_verify_reports_shared_vertices():
    # a - x - b and c - x - d share x
    g = Graph(["a", "b", "c", "d", "x"], [(0, 4), (4, 1), (2, 4), (4, 3)])
    A = TerminalSet((0, 1, 2, 3))
    cert = Certificate(variant="gallai", k=2, ell=None, outcome="paths", claimed_bound=8,
                       paths=(Path((0, 4, 1), (0, 1)), Path((2, 4, 3), (2, 3))))
    report = verify_certificate(g, A, None, None, cert)
    assert report.violations == ["paths 0 and 1 share vertex x"]


def test_verify_reports_uncovered_path(two_edges):
    g, A, _, _ = two_edges
    cert = Certificate(variant="gallai", k=2, ell=None, outcome="hitting", claimed_bound=8,
                       hitting_type="vertex", hitting=(0,))
    report = verify_certificate(g, A, None, None, cert)
    assert report.violations == ["path a2-b2 avoids the hitting set"]


def test_verify_notes_budget_exhaustion(two_edges):
    g, A, _, _ = two_edges
    cert = Certificate(variant="gallai", k=2, ell=None, outcome="hitting", claimed_bound=8,
                       hitting_type="vertex", hitting=(0, 2))
    report = verify_certificate(g, A, None, None, cert, budget=Budget(max_vertices=1))
    assert report.passed
    assert report.notes[0].startswith("coverage not checked")


@pytest.mark.parametrize("ell", [1, 2, 3, 4, 5])
def test_elementary_combs_are_combs(ell):
    g, A = elementary_comb(ell)
    assert is_comb(g, A, ell)
    assert not is_comb(g, A, ell + 1)


def test_claw_is_a_two_comb_but_not_a_bigger_star(star):
    g, A = star(3)
    assert is_comb(g, A, 2)
    g, A = star(4)
    assert not is_comb(g, A, 3)


def test_subdivided_comb_on_a_subgraph():
    # spine p0 - s - p2 with a subdivided tooth s - m - t and a stray edge p0 - t
    g = Graph(["p0", "s", "p2", "m", "t"], [(0, 1), (1, 2), (1, 3), (3, 4), (0, 4)])
    A = TerminalSet((0, 2, 4))
    assert not is_comb(g, A, 2)
    assert is_comb(g, A, 2, edges=[0, 1, 2, 3])


@pytest.mark.parametrize("ell", [None, 0])
def test_verify_reports_long_certificate_without_length(ell):
    instance = gen_long_lb(2, 4)
    cert = Certificate(variant="long", k=2, ell=ell, outcome="hitting", claimed_bound=8,
                       hitting_type="vertex", hitting=())
    report = verify_certificate(instance.graph, instance.A, None, None, cert)
    assert not report.passed
    assert report.violations == ["long certificate needs ell >= 1, got {!r}".format(ell)]


def test_verify_reports_unknown_variant(two_edges):
    g, A, _, _ = two_edges
    cert = Certificate(variant="odd", k=1, outcome="paths", claimed_bound=4, paths=(Path((0, 1), (0,)),))
    report = verify_certificate(g, A, None, None, cert)
    assert report.violations == ["unknown variant 'odd'"]


def test_aba_enumeration_keeps_only_paths_through_b():
    g, A, B, _ = parse_graph("graph undirected\nvertex a A\nvertex b B\nvertex x\nvertex c A\n"
                             "edge a b\nedge b c\nedge a x\nedge x c\n")
    paths = enumerate_paths(g, A, B, None, PathSpec("aba"))
    assert [set(p.vertices) for p in paths] == [{0, 1, 3}]
