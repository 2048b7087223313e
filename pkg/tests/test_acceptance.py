"""Exhaustive sweeps over seeded random instances and the counterexample families."""
import numpy
import pytest

from epframe.epsolve import ceil_log2, solve
from epframe.extract import Tree, hub_even_cycles, leaf_pair_paths, validate_cycle
from epframe.gallery import (ModularFamilyParams, classify_grid_path, gen_directed_grid, gen_grid_mod,
                             gen_random, gen_wall_aba)
from epframe.graph import Graph
from epframe.labeling import PathSpec
from epframe.oracle import Budget, enumerate_paths, max_disjoint, min_hitting_set, verify_certificate

pytestmark = pytest.mark.slow

BIG = Budget(max_vertices=None, max_nodes=5 * 10 ** 6)

BOUNDS = {"gallai": lambda k, a, ell: 4 * k - 1, "long": lambda k, a, ell: 4 * k * ell - 1,
          "even": lambda k, a, ell: 10 * k, "mader-edge": lambda k, a, ell: k * ceil_log2(a)}


def random_subcubic_tree(rng, n):
    degree = [0] * n
    pairs = []
    for v in range(1, n):
        choices = [u for u in range(v) if degree[u] < 3]
        u = int(rng.choice(choices))
        pairs.append((u, v))
        degree[u] += 1
        degree[v] += 1
    return Graph(["v{}".format(i) for i in range(n)], pairs)


def test_leaf_pairing_on_random_subcubic_trees():
    rng = numpy.random.default_rng(0)
    for _ in range(1000):
        t = Tree.from_graph(random_subcubic_tree(rng, int(rng.integers(2, 41))))
        paths = leaf_pair_paths(t)
        assert len(paths) == len(t.leaves()) // 2
        seen = set()
        for p in paths:
            assert not seen & set(p.vertices)
            seen |= set(p.vertices)


@pytest.mark.parametrize("variant, rounds", [("gallai", 500), ("long", 300), ("even", 300),
                                             ("mader-edge", 300)])
def test_dichotomies_on_random_graphs(variant, rounds):
    rng = numpy.random.default_rng(1)
    for seed in range(rounds):
        instance = gen_random(int(rng.integers(0, 15)), p=float(rng.uniform(0.1, 0.5)), seed=seed)
        g, A = instance.graph, instance.A
        k = int(rng.integers(1, 4))
        ell = int(rng.integers(2, 5)) if variant == "long" else None
        cert = solve(variant, g, A, k, ell=ell)
        report = verify_certificate(g, A, None, None, cert)
        assert report.passed, (seed, report.violations)
        if cert.outcome == "hitting":
            assert len(cert.hitting) <= BOUNDS[variant](k, len(A), ell), (seed, cert.hitting)


def test_hub_cycles_on_constructed_instances():
    rng = numpy.random.default_rng(2)
    for _ in range(50):
        k = int(rng.integers(1, 3))
        spokes = 6 * k + int(rng.integers(0, 4))
        # hub x over a path of spokes vertices, plus random chords
        pairs = [(0, i) for i in range(1, spokes + 1)] + [(i, i + 1) for i in range(1, spokes)]
        for _ in range(int(rng.integers(0, 4))):
            u, v = sorted(int(x) for x in rng.choice(numpy.arange(1, spokes + 1), 2, replace=False))
            if v - u > 1:
                pairs.append((u, v))
        g = Graph(["x"] + ["p{}".format(i) for i in range(spokes)], pairs)
        cycles = hub_even_cycles(g, 0, k)
        assert len(cycles) == k
        used = set()
        for c in cycles:
            validate_cycle(g, c)
            assert c.length % 2 == 0
            assert not used & set(c.edges)
            used |= set(c.edges)


def test_zero_mod_grid():
    instance = gen_grid_mod(ModularFamilyParams(6, 0, 3))
    g, A = instance.graph, instance.A
    value, _ = max_disjoint(g, A, None, None, PathSpec("zero-mod", m=6, d=0), budget=BIG)
    assert value == 1
    for p in enumerate_paths(g, A, None, None, PathSpec("plain"), BIG):
        kind, used = classify_grid_path(instance, p)
        assert (p.length % 6 == 0) == (kind == "crossing" and used == 1)


@pytest.mark.parametrize("m, d", [(6, 0), (6, 1), (6, 3), (8, 5), (9, 2)])
def test_residue_audit(m, d):
    instance = gen_grid_mod(ModularFamilyParams(m, d, 2))
    proper = 0
    for p in enumerate_paths(instance.graph, instance.A, None, None, PathSpec("plain"), BIG):
        kind, used = classify_grid_path(instance, p)
        if kind == "crossing" and used == 1:
            assert p.length % m == d
            proper += 1
        else:
            assert p.length % m != d
    assert proper > 0


def test_wall_aba_edge_version():
    instance = gen_wall_aba(2)
    g, A, B = instance.graph, instance.A, instance.B
    spec = PathSpec("aba", disjointness="edge")
    assert max_disjoint(g, A, B, None, spec, budget=BIG)[0] == 1
    assert min_hitting_set(g, A, B, None, spec, mode="edge", cap=1, budget=BIG) is None


def test_directed_grid():
    small, large = gen_directed_grid(2), gen_directed_grid(3)
    spec = PathSpec("directed-aba")
    assert max_disjoint(large.graph, large.A, large.B, None, spec, budget=BIG)[0] == 1
    sizes = [len(min_hitting_set(i.graph, i.A, i.B, None, spec, budget=BIG)) for i in (small, large)]
    assert sizes[0] <= sizes[1]
