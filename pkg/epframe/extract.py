# =============================================================================
# ~/epframe/epframe/extract.py
#
# created  18 October 2026
# modified
#
# This py-file contains the extraction routines that turn a large tree (a
# frame component, a spanning tree) into many disjoint target objects.
#
# 1. leaf_pair_paths -> floor(p/2) vertex-disjoint leaf-to-leaf paths
# 2. even_component_paths -> disjoint even A-paths inside one tree
# 3. tree_edge_disjoint_apaths -> edge-disjoint A-paths in any tree
# 4. hub_even_cycles -> edge-disjoint even cycles at a high-degree vertex
#
# =============================================================================
"""
Extraction from trees
~~~~~~~~~~~~~~~~~~~~~

+----------------------------------------+------------------------------------------+
|      Name                              |        Returns                           |
+========================================+==========================================+
|:py:func:`.leaf_pair_paths`             |vertex-disjoint leaf-to-leaf paths        |
+----------------------------------------+------------------------------------------+
|:py:func:`.even_component_paths`        |vertex-disjoint even A-paths              |
+----------------------------------------+------------------------------------------+
|:py:func:`.tree_edge_disjoint_apaths`   |edge-disjoint A-paths                     |
+----------------------------------------+------------------------------------------+
|:py:func:`.hub_even_cycles`             |edge-disjoint even cycles                 |
+----------------------------------------+------------------------------------------+

Trees are standalone :py:class:`.Tree` objects over ``(edge id, u, v)``
triples, so the same routines work on frame components, spanning trees and
auxiliary trees whose extra vertices and edges have synthetic ids.

"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from epframe.frame import SEARCH_BUDGET, SearchCounter
from epframe.graph import (EPFrameError, Graph, InvalidPathError, Path, PreconditionError,
                           TerminalSet, breadth_first, components, simple_paths, spanning_forest)

_logger = logging.getLogger("epframe.extract")


class ExtractionError(EPFrameError):
    """An extraction routine was called outside its preconditions."""


# =================================Trees=======================================
class Tree(object):
    def __init__(self, vertices: Iterable[int], triples: Iterable[Tuple[int, int, int]]):
        self.vertices = tuple(sorted(set(vertices)))
        self.adj: Dict[int, List[Tuple[int, int]]] = {v: [] for v in self.vertices}
        self._edge = {}
        self.edge_ids = []
        for eid, u, v in triples:
            if u not in self.adj or v not in self.adj:
                raise ExtractionError("tree edge {} leaves the vertex set".format(eid))
            self.adj[u].append((v, eid))
            self.adj[v].append((u, eid))
            self._edge[(min(u, v), max(u, v))] = eid
            self.edge_ids.append(eid)

    @classmethod
    def from_graph(cls, g: Graph, vertices=None, edge_ids=None):
        vertices = g.vertices if vertices is None else vertices
        keep = set(vertices)
        if edge_ids is None:
            edge_ids = [e.id for e in g.edges if e.u in keep and e.v in keep]
        return cls(keep, ((eid, g.edge(eid).u, g.edge(eid).v) for eid in edge_ids))

    @classmethod
    def from_frame_component(cls, frame, cell):
        g = frame.g
        return cls(cell, ((eid, g.edge(eid).u, g.edge(eid).v) for eid in frame.component_edges(cell)))

    def degree(self, v):
        return len(self.adj[v])

    def leaves(self):
        return [v for v in self.vertices if len(self.adj[v]) == 1]

    def pairs(self):
        return [(u, v) for (u, v) in self._edge]

    def check(self):
        if not self.vertices:
            raise ExtractionError("empty tree")
        if len(self._edge) != len(self.edge_ids) or len(self.edge_ids) != len(self.vertices) - 1:
            raise ExtractionError("not a tree: {} vertices, {} edges"
                                  .format(len(self.vertices), len(self.edge_ids)))
        order, _ = breadth_first(self.vertices, self.pairs(), self.vertices[0])
        if len(order) != len(self.vertices):
            raise ExtractionError("not a tree: disconnected")

    def edge_between(self, u, v):
        try:
            return self._edge[(min(u, v), max(u, v))]
        except KeyError:
            raise InvalidPathError("no tree edge between {} and {}".format(u, v))

    def path_along(self, vertices):
        vertices = tuple(vertices)
        return Path(vertices, tuple(self.edge_between(a, b) for a, b in zip(vertices, vertices[1:])))

    def bipartition(self):
        """Map vertex -> 0/1 by BFS depth parity from the smallest vertex."""
        order, parent = breadth_first(self.vertices, self.pairs(), self.vertices[0])
        side = {}
        for v in order:
            p = parent[v]
            side[v] = 0 if p is None else side[p] ^ 1
        return side

    def rooted_order(self, root):
        return breadth_first(self.vertices, self.pairs(), root)
# =============================================================================


# ==============================leaf_pair_paths================================
def _contract(t: Tree):
    """Suppress degree-2 vertices; links map node -> node -> full vertex run."""
    nodes = [v for v in t.vertices if t.degree(v) != 2]
    links: Dict[int, Dict[int, List[int]]] = {v: {} for v in nodes}
    for x in nodes:
        for w, _ in t.adj[x]:
            run = [x, w]
            while t.degree(run[-1]) == 2:
                a, b = (n for n, _ in t.adj[run[-1]])
                run.append(b if a == run[-2] else a)
            links[x][run[-1]] = run
    return links


def leaf_pair_paths(t: Tree) -> List[Path]:
    """
    Exactly floor(p/2) pairwise vertex-disjoint leaf-to-leaf paths, p the
    number of leaves. Degree-2 vertices are suppressed, the tree is rooted
    at its smallest leaf, and a deepest branch vertex with its two leaf
    children is cut off repeatedly until at most three leaves remain.
    """
    t.check()
    for v in t.vertices:
        if t.degree(v) > 3:
            raise ExtractionError("vertex {} has degree {} > 3".format(v, t.degree(v)))
    if len(t.leaves()) < 2:
        raise ExtractionError("tree has fewer than 2 leaves")
    links = _contract(t)
    out = []
    while True:
        leaves = sorted(v for v in links if len(links[v]) == 1)
        if len(leaves) <= 3:
            break
        root = leaves[0]
        depth, parent = {root: 0}, {root: None}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in links[v]:
                if w not in depth:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    stack.append(w)
        branch = [v for v in links if len(links[v]) == 3]
        node = min(branch, key=lambda v: (-depth[v], v))
        l1, l2 = sorted(w for w in links[node] if w != parent[node])
        run = links[l1][node] + links[node][l2][1:]
        out.append(t.path_along(run))
        up = parent[node]
        for v in (l1, l2, node):
            for w in list(links[v]):
                del links[w][v]
            del links[v]
        a, b = sorted(links[up])
        joined = links[a][up] + links[up][b][1:]
        del links[a][up], links[b][up], links[up]
        links[a][b] = joined
        links[b][a] = joined[::-1]
    leaves = sorted(v for v in links if len(links[v]) == 1)
    x, y = leaves[0], leaves[1]
    if y in links[x]:
        run = links[x][y]
    else:
        (center,) = links[x].keys()
        run = links[x][center] + links[center][y][1:]
    out.append(t.path_along(run))
    return out
# =============================================================================


# ============================even_component_paths=============================
def even_component_paths(t: Tree, A: TerminalSet) -> List[Path]:
    t.check()
    in_tree = [v for v in t.vertices if v in A]
    for v in in_tree:
        if t.degree(v) > 1:
            raise ExtractionError("A-vertex {} is not a leaf".format(v))
    if not in_tree:
        return []
    side = t.bipartition()
    classes = ([v for v in in_tree if side[v] == 0], [v for v in in_tree if side[v] == 1])
    if len(classes[0]) != len(classes[1]):
        A_T = max(classes, key=len)
    else:
        A_T = classes[side[in_tree[0]]]
    keep = set(A_T)
    adj = {v: set(w for w, _ in t.adj[v]) for v in t.vertices}
    queue = [v for v in t.vertices if len(adj[v]) <= 1 and v not in keep]
    while queue:
        v = queue.pop()
        if v not in adj:
            continue
        for w in adj.pop(v):
            adj[w].discard(v)
            if len(adj[w]) <= 1 and w not in keep:
                queue.append(w)
    pruned = Tree(adj, ((t.edge_between(u, v), u, v) for u in adj for v in adj[u] if u < v))
    if len(pruned.leaves()) < 2:
        return []
    paths = leaf_pair_paths(pruned)
    _logger.debug("even extraction: |A_T|=%d -> %d paths", len(A_T), len(paths))
    return paths
# =============================================================================


# =========================tree_edge_disjoint_apaths===========================
def tree_edge_disjoint_apaths(t: Tree, A) -> List[Path]:
    """
    At least floor(|A|/2) edge-disjoint A-paths. Post-order sweep from the
    smallest vertex: each child edge carries at most one dangling path; a
    vertex outside A pairs incoming dangles and passes one leftover up, a
    vertex in A closes every dangle and passes itself up.
    """
    t.check()
    members = [v for v in t.vertices if v in A]
    if len(members) < 2:
        raise ExtractionError("need at least 2 A-vertices, got {}".format(len(members)))
    order, parent = t.rooted_order(t.vertices[0])
    incoming: Dict[int, List[List[int]]] = {v: [] for v in t.vertices}
    out = []
    for v in reversed(order):
        dangles = incoming.pop(v)
        if v in A:
            out.extend(d for d in dangles)
            up = [v]
        else:
            for i in range(0, len(dangles) - 1, 2):
                out.append(dangles[i] + dangles[i + 1][::-1][1:])
            up = dangles[-1] if len(dangles) % 2 else None
        p = parent[v]
        if p is not None and up is not None:
            incoming[p].append(up + [p])
    return [t.path_along(run) for run in out]
# =============================================================================


# ==================================Cycles=====================================
@dataclass(frozen=True)
class Cycle:
    """Closed walk without repeated vertices; ``edges[i]`` joins
    ``vertices[i]`` and ``vertices[(i+1) % len]``."""
    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]

    @property
    def length(self):
        return len(self.edges)


def validate_cycle(g: Graph, c: Cycle):
    n = len(c.vertices)
    if n < 2 or len(c.edges) != n:
        raise InvalidPathError("a cycle needs at least two vertices and one edge per vertex")
    if len(set(c.vertices)) != n or len(set(c.edges)) != n:
        raise InvalidPathError("cycle repeats a vertex or an edge")
    for i, eid in enumerate(c.edges):
        if not 0 <= eid < g.m:
            raise InvalidPathError("unknown edge id {}".format(eid))
        e = g.edge(eid)
        if {e.u, e.v} != {c.vertices[i], c.vertices[(i + 1) % n]} or e.is_loop:
            raise InvalidPathError("edge {} does not close the cycle at position {}".format(eid, i))


def _even_cycle(g: Graph, allowed, counter):
    for s in sorted(allowed):
        for w, e0 in g.steps(s):
            if w <= s or w not in allowed:
                continue
            paths = simple_paths(g, w, lambda v: v in allowed and v > s, lambda v: v == s,
                                 tick=counter)
            for vs, es in paths:
                if len(vs) == 2 and es[0] == e0:
                    continue
                if (len(es) + 1) % 2 == 0:
                    return Cycle((s,) + vs[:-1], (e0,) + es)
    return None


def hub_even_cycles(g: Graph, x: int, k: int, budget=SEARCH_BUDGET) -> List[Cycle]:
    """k edge-disjoint even cycles, each through ``x`` or inside a component of g - x."""
    if g.directed or g.has_loops():
        raise PreconditionError("hub cycles need an undirected loop-free graph")
    if k < 1:
        raise PreconditionError("k must be >= 1")
    if g.degree(x) < 6 * k:
        raise ExtractionError("deg({}) = {} < 6k = {}".format(g.name(x), g.degree(x), 6 * k))
    rest = [v for v in g.vertices if v != x]
    sub, remap = g.subgraph(rest, [e.id for e in g.edges if x not in (e.u, e.v)])
    back = {i: v for v, i in remap.items()}
    cells = [tuple(back[i] for i in c) for c in components(sub)]
    counter = SearchCounter(budget, "even cycle search")

    if len(cells) >= k:
        found = []
        for cell in cells:
            c = _even_cycle(g, set(cell) | {x}, counter)
            if c is None:
                break
            found.append(c)
            if len(found) == k:
                _logger.info("hub %s: %d even cycles, one per component", g.name(x), k)
                return found

    cycles = []
    for cell in cells:
        inside = set(cell)
        hub_edges = [eid for w, eid in g.steps(x) if w in inside]
        subdiv = {g.n + eid: eid for eid in hub_edges}
        triples = [(eid, g.edge(eid).u, g.edge(eid).v) for eid in spanning_forest(g, inside)]
        triples += [(g.m + eid, g.n + eid, g.edge(eid).other(x)) for eid in hub_edges]
        aux = Tree(list(inside) + list(subdiv), triples)
        side = aux.bipartition()
        by_side = ([s for s in sorted(subdiv) if side[s] == 0], [s for s in sorted(subdiv) if side[s] == 1])
        if len(by_side[0]) != len(by_side[1]):
            chosen = max(by_side, key=len)
        elif by_side[0]:
            chosen = by_side[side[min(subdiv)]]
        else:
            continue
        if len(chosen) < 2:
            continue
        for p in tree_edge_disjoint_apaths(aux, set(chosen)):
            e, f = subdiv[p.first], subdiv[p.last]
            cycles.append(Cycle((x,) + p.vertices[1:-1], (e,) + p.edges[1:-1] + (f,)))
            if len(cycles) == k:
                _logger.info("hub %s: %d even cycles through the hub", g.name(x), k)
                return cycles
    raise ExtractionError("found only {} of {} even cycles at {}".format(len(cycles), k, g.name(x)))
# =============================================================================
