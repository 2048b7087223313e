# =============================================================================
# ~/epframe/epframe/graph.py
#
# created  18 October 2026
# modified
#
# This py-file contains the multigraph representation used by every other
# module, the terminal sets A and B, simple paths, and the line-based graph
# document format.
#
# note: Vertex names are mapped to dense integer ids in declaration order and
#       all tie-breaking elsewhere uses these ids.
#
# =============================================================================
"""
Graphs, terminal sets and paths
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

+------------------------------+-----------------------------------------------+
|      Name                    |        Purpose                                |
+==============================+===============================================+
|:py:class:`.Graph`            |immutable multigraph with named vertices       |
+------------------------------+-----------------------------------------------+
|:py:class:`.TerminalSet`      |the sets A and B                               |
+------------------------------+-----------------------------------------------+
|:py:class:`.Path`             |vertex sequence plus the edge ids walked       |
+------------------------------+-----------------------------------------------+
|:py:func:`.parse_graph`       |graph document -> (graph, A, B, labeling)      |
+------------------------------+-----------------------------------------------+
|:py:func:`.serialize_graph`   |canonical graph document                       |
+------------------------------+-----------------------------------------------+
|:py:func:`.components`        |connected components ordered by smallest id    |
+------------------------------+-----------------------------------------------+

Graph document grammar::

    # comment
    graph undirected | graph directed
    group Zm <m> [directed] | group Z [directed] | group Z2w <w> [directed]
    vertex <name> [A] [B]
    edge <u> <v> [label=<elt>]

"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

_logger = logging.getLogger("epframe.graph")


# ================================Errors=======================================
class EPFrameError(Exception):
    """Root of every error raised by epframe."""


class PreconditionError(EPFrameError):
    """An operation was called on an input outside its domain."""


class GraphFormatError(EPFrameError):
    """A graph document does not follow the grammar."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line {}: {}".format(line, message)
        super().__init__(message)


class InvalidPathError(EPFrameError):
    """A vertex/edge sequence is not a simple path of the graph."""
# =============================================================================


# ==============================Domain types===================================
@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int

    @property
    def is_loop(self):
        return self.u == self.v

    def other(self, x):
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class TerminalSet:
    """Ordered set of vertex ids carrying the label ``A`` or ``B``."""
    members: Tuple[int, ...] = ()
    label: str = "A"
    _lookup: FrozenSet[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.label not in ("A", "B"):
            raise PreconditionError("terminal label must be A or B")
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "_lookup", frozenset(members))

    def __contains__(self, v):
        return v in self._lookup

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    @property
    def as_set(self):
        return self._lookup


@dataclass(frozen=True)
class Path:
    """A simple path; ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]``."""
    vertices: Tuple[int, ...]
    edges: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    @property
    def length(self):
        return len(self.edges)

    @property
    def first(self):
        return self.vertices[0]

    @property
    def last(self):
        return self.vertices[-1]

    @property
    def interior(self):
        return self.vertices[1:-1]

    def reversed(self):
        return Path(self.vertices[::-1], self.edges[::-1])


class Graph(object):
    """
    Finite multigraph, undirected or directed as a whole.

    Parallel edges and loops are storable; every path solver rejects loops.
    Instances are immutable after construction.

    **How to use:**

    ::

       g = Graph(["a", "u", "b"], [(0, 1), (1, 2)])
       g.steps(1)   # ((0, 0), (2, 1)) -- (neighbour, edge id) in edge-id order

    """

    def __init__(self, names: Sequence[str], edges: Sequence[Tuple[int, int]], directed=False):
        self.directed = bool(directed)
        self._names = tuple(str(x) for x in names)
        self._index = {}
        for i, name in enumerate(self._names):
            if name in self._index:
                raise PreconditionError("duplicate vertex {!r}".format(name))
            self._index[name] = i
        n = len(self._names)
        self._edges = []
        steps = [[] for _ in range(n)]
        out_steps = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError("edge {} has an endpoint outside the vertex set".format(eid))
            self._edges.append(Edge(eid, u, v))
            steps[u].append((v, eid))
            out_steps[u].append((v, eid))
            if u != v:
                steps[v].append((u, eid))
            if not self.directed and u != v:
                out_steps[v].append((u, eid))
        self._steps = tuple(tuple(s) for s in steps)
        self._out_steps = tuple(tuple(s) for s in out_steps)

    def __repr__(self):
        return "Graph(n={}, m={}, directed={})".format(self.n, self.m, self.directed)

    @property
    def n(self):
        return len(self._names)

    @property
    def m(self):
        return len(self._edges)

    @property
    def vertices(self):
        return range(self.n)

    @property
    def edges(self):
        return tuple(self._edges)

    @property
    def names(self):
        return self._names

    def name(self, v):
        return self._names[v]

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise PreconditionError("unknown vertex {!r}".format(name))

    def has_vertex_name(self, name):
        return name in self._index

    def edge(self, eid):
        return self._edges[eid]

    def steps(self, v):
        """(neighbour, edge id) pairs over all incident edges, ignoring orientation."""
        return self._steps[v]

    def out_steps(self, v):
        """(neighbour, edge id) pairs respecting orientation when directed."""
        return self._out_steps[v]

    def degree(self, v):
        return sum(2 if self._edges[eid].is_loop else 1 for _, eid in self._steps[v])

    def has_loops(self):
        return any(e.is_loop for e in self._edges)

    def edges_between(self, u, v, oriented=False):
        found = []
        for w, eid in (self._out_steps[u] if oriented else self._steps[u]):
            if w == v:
                found.append(eid)
        return found

    def subgraph(self, vertices: Iterable[int], edge_ids: Iterable[int]):
        """Standalone copy on the given vertices/edges; returns (graph, old->new id map)."""
        keep = sorted(set(vertices))
        remap = {v: i for i, v in enumerate(keep)}
        pairs = []
        for eid in sorted(set(edge_ids)):
            e = self._edges[eid]
            pairs.append((remap[e.u], remap[e.v]))
        return Graph([self._names[v] for v in keep], pairs, directed=self.directed), remap
# =============================================================================


# ===============================Path checks===================================
def validate_path(g: Graph, p: Path, oriented=False):
    """Raise :py:class:`.InvalidPathError` unless ``p`` is a simple path of ``g``."""
    vs, es = p.vertices, p.edges
    if not vs:
        raise InvalidPathError("path has no vertices")
    if len(es) != len(vs) - 1:
        raise InvalidPathError("path needs exactly one edge per consecutive vertex pair")
    for v in vs:
        if not 0 <= v < g.n:
            raise InvalidPathError("unknown vertex id {}".format(v))
    if len(set(vs)) != len(vs):
        raise InvalidPathError("path repeats a vertex")
    for i, eid in enumerate(es):
        if not 0 <= eid < g.m:
            raise InvalidPathError("unknown edge id {}".format(eid))
        e = g.edge(eid)
        a, b = vs[i], vs[i + 1]
        if oriented and g.directed:
            if (e.u, e.v) != (a, b):
                raise InvalidPathError("edge {} is traversed against its orientation".format(eid))
        elif {e.u, e.v} != {a, b}:
            raise InvalidPathError("edge {} does not join {} and {}".format(eid, a, b))


def path_through(g: Graph, vertices: Sequence[int], oriented=False):
    """Path along ``vertices`` using the smallest edge id between consecutive vertices."""
    edges = []
    for a, b in zip(vertices, vertices[1:]):
        between = g.edges_between(a, b, oriented=oriented and g.directed)
        if not between:
            raise InvalidPathError("no edge between {} and {}".format(g.name(a), g.name(b)))
        edges.append(min(between))
    return Path(tuple(vertices), tuple(edges))


def simple_paths(g: Graph, start: int,
                 passable: Callable[[int], bool],
                 terminal: Callable[[int], bool],
                 tick: Optional[Callable[[], None]] = None,
                 oriented=False,
                 admit: Optional[Callable[[int, int], bool]] = None) -> Iterator[Tuple[tuple, tuple]]:
    """
    Depth-first generator of simple paths leaving ``start``.

    A path stops at the first terminal vertex it reaches and is yielded as a
    ``(vertices, edges)`` pair; only passable vertices are extended. ``admit``
    sees ``(vertex, length_after_step)`` and may refuse the step. ``tick`` is
    called once per step so callers can enforce a node budget.
    """
    steps = g.out_steps if oriented else g.steps
    vpath, epath = [start], []
    on_path = {start}
    stack = [iter(steps(start))]
    while stack:
        for w, eid in stack[-1]:
            if w in on_path:
                continue
            if admit is not None and not admit(w, len(epath) + 1):
                continue
            if tick is not None:
                tick()
            if terminal(w):
                yield tuple(vpath) + (w,), tuple(epath) + (eid,)
                continue
            if passable(w):
                vpath.append(w)
                epath.append(eid)
                on_path.add(w)
                stack.append(iter(steps(w)))
                break
        else:
            stack.pop()
            on_path.discard(vpath.pop())
            if epath:
                epath.pop()
# =============================================================================


# =========================Components and BFS trees============================
def _csr(vertices: Sequence[int], pairs: Iterable[Tuple[int, int]], symmetric=True):
    remap = {v: i for i, v in enumerate(vertices)}
    rows, cols = [], []
    for u, v in pairs:
        if u == v:
            continue
        rows.append(remap[u])
        cols.append(remap[v])
        if symmetric:
            rows.append(remap[v])
            cols.append(remap[u])
    size = len(vertices)
    data = numpy.ones(len(rows), dtype=numpy.int8)
    mat = csr_matrix((data, (rows, cols)), shape=(size, size))
    mat.sort_indices()
    return mat, remap


def components(g: Graph) -> List[Tuple[int, ...]]:
    """Connected components (underlying undirected graph), ordered by smallest member."""
    if g.n == 0:
        return []
    mat, _ = _csr(list(g.vertices), ((e.u, e.v) for e in g.edges))
    _, labels = connected_components(mat, directed=False)
    cells: Dict[int, List[int]] = {}
    for v, lab in enumerate(labels):
        cells.setdefault(int(lab), []).append(v)
    return sorted((tuple(c) for c in cells.values()), key=lambda c: c[0])


def breadth_first(vertices: Sequence[int], pairs: Iterable[Tuple[int, int]], root: int):
    """
    BFS over the undirected graph spanned by ``pairs`` restricted to ``vertices``.

    Returns ``(order, parent)`` where ``order`` lists the vertices reached from
    ``root`` and ``parent`` maps each of them to its BFS parent (``None`` for root).
    """
    vertices = sorted(set(vertices))
    mat, remap = _csr(vertices, pairs)
    order, pred = breadth_first_order(mat, remap[root], directed=False, return_predecessors=True)
    parent = {}
    for i in order:
        p = pred[i]
        parent[vertices[i]] = None if p < 0 else vertices[p]
    return [vertices[i] for i in order], parent


def spanning_forest(g: Graph, vertices: Optional[Iterable[int]] = None) -> List[int]:
    """Edge ids of a BFS spanning forest, each tree rooted at its smallest vertex."""
    keep = set(g.vertices if vertices is None else vertices)
    pairs = [(e.u, e.v) for e in g.edges if e.u in keep and e.v in keep]
    chosen = []
    seen = set()
    for root in sorted(keep):
        if root in seen:
            continue
        order, parent = breadth_first(sorted(keep), pairs, root)
        seen.update(order)
        for v in order:
            p = parent[v]
            if p is not None:
                chosen.append(min(g.edges_between(p, v)))
    return sorted(chosen)
# =============================================================================


# =============================Document format=================================
def parse_graph(text: str):
    """
    Parse a graph document.

    Returns ``(graph, A, B, labeling)``; ``B`` is ``None`` unless some vertex
    carries the ``B`` flag and ``labeling`` is ``None`` unless a ``group``
    line is present. Edges without a label get the group's zero element.
    """
    from epframe.labeling import EdgeLabeling, GroupSpec, LabelingError

    directed = None
    group, mode = None, "undirected"
    names, flags_a, flags_b = [], [], []
    index = {}
    pairs, labels = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        head = tokens[0]
        if directed is None:
            if head != "graph" or len(tokens) != 2 or tokens[1] not in ("undirected", "directed"):
                raise GraphFormatError("expected 'graph undirected' or 'graph directed'", lineno)
            directed = tokens[1] == "directed"
        elif head == "graph":
            raise GraphFormatError("repeated graph header", lineno)
        elif head == "group":
            if group is not None:
                raise GraphFormatError("repeated group declaration", lineno)
            if pairs:
                raise GraphFormatError("group must be declared before the first edge", lineno)
            try:
                group, mode = GroupSpec.from_declaration(tokens[1:])
            except LabelingError as err:
                raise GraphFormatError(str(err), lineno)
        elif head == "vertex":
            if len(tokens) < 2:
                raise GraphFormatError("vertex line needs a name", lineno)
            name = tokens[1]
            if name in index:
                raise GraphFormatError("duplicate vertex {!r}".format(name), lineno)
            extra = tokens[2:]
            if any(t not in ("A", "B") for t in extra) or len(set(extra)) != len(extra):
                raise GraphFormatError("vertex flags must be A and/or B", lineno)
            index[name] = len(names)
            names.append(name)
            flags_a.append("A" in extra)
            flags_b.append("B" in extra)
        elif head == "edge":
            if len(tokens) not in (3, 4):
                raise GraphFormatError("edge line needs two endpoints and an optional label", lineno)
            ends = []
            for name in tokens[1:3]:
                if name not in index:
                    raise GraphFormatError("undeclared vertex {!r}".format(name), lineno)
                ends.append(index[name])
            label = None
            if len(tokens) == 4:
                if not tokens[3].startswith("label="):
                    raise GraphFormatError("unexpected token {!r}".format(tokens[3]), lineno)
                if group is None:
                    raise GraphFormatError("label present without group declaration", lineno)
                try:
                    label = group.parse_element(tokens[3][len("label="):])
                except LabelingError as err:
                    raise GraphFormatError(str(err), lineno)
            pairs.append(tuple(ends))
            labels.append(label)
        else:
            raise GraphFormatError("unknown directive {!r}".format(head), lineno)
    if directed is None:
        raise GraphFormatError("empty document", 1)
    g = Graph(names, pairs, directed=directed)
    A = TerminalSet(tuple(i for i, f in enumerate(flags_a) if f), "A")
    B = TerminalSet(tuple(i for i, f in enumerate(flags_b) if f), "B") if any(flags_b) else None
    lab = None
    if group is not None:
        weights = {eid: (group.zero() if x is None else x) for eid, x in enumerate(labels)}
        lab = EdgeLabeling.for_graph(g, group, mode, weights)
    _logger.debug("parsed graph n=%d m=%d directed=%s", g.n, g.m, g.directed)
    return g, A, B, lab


def serialize_graph(g: Graph, A: TerminalSet, B: Optional[TerminalSet] = None,
                    lab=None, comments: Sequence[str] = ()) -> str:
    """Canonical document: comments, header, group, vertices and edges in id order."""
    lines = ["# " + c for c in comments]
    lines.append("graph directed" if g.directed else "graph undirected")
    if lab is not None:
        lines.append(lab.group.declaration(lab.mode))
    A = A if A is not None else TerminalSet()
    for v in g.vertices:
        parts = ["vertex", g.name(v)]
        if v in A:
            parts.append("A")
        if B is not None and v in B:
            parts.append("B")
        lines.append(" ".join(parts))
    for e in g.edges:
        parts = ["edge", g.name(e.u), g.name(e.v)]
        if lab is not None:
            parts.append("label=" + lab.group.format_element(lab.weight(e.id)))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
# =============================================================================
