# =============================================================================
# ~/epframe/epframe/frame.py
#
# created  18 October 2026
# modified
#
# This py-file contains frame forests: subcubic forests whose leaves are
# exactly their A-vertices, grown by augmentation until maximal.
#
# note: Augmentations are searched in a fixed order (new components first,
#       then attachments, each in vertex-id order) so frames are
#       reproducible.
#
# =============================================================================
"""
Frame forests
~~~~~~~~~~~~~

+-----------------------------------+------------------------------------------+
|      Name                         |        Purpose                           |
+===================================+==========================================+
|:py:class:`.FrameVariant`          |plain, long(ell) or even                  |
+-----------------------------------+------------------------------------------+
|:py:class:`.Frame`                 |the forest plus per-component witnesses   |
+-----------------------------------+------------------------------------------+
|:py:func:`.find_augmentation`      |one NewComponent/AttachPath step or None  |
+-----------------------------------+------------------------------------------+
|:py:func:`.construct_frame`        |grow a maximal frame from the empty one   |
+-----------------------------------+------------------------------------------+
|:py:func:`.frame_stats`            |c, abs(A cap V(F)), degree-3 set, leaves  |
+-----------------------------------+------------------------------------------+
|:py:func:`.check_frame`            |raise on any broken frame invariant       |
+-----------------------------------+------------------------------------------+
|:py:func:`.dump_frame`             |frame as a graph document                 |
+-----------------------------------+------------------------------------------+

**How to use:**

::

   from epframe.frame import FrameVariant, construct_frame, frame_stats
   frame = construct_frame(g, A, FrameVariant("long", 3))
   stats = frame_stats(frame)

"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from epframe.graph import (EPFrameError, Graph, Path, PreconditionError, TerminalSet, breadth_first,
                           serialize_graph, simple_paths)

_logger = logging.getLogger("epframe.frame")

SEARCH_BUDGET = 10 ** 6


class FrameInvariantError(EPFrameError):
    """A frame breaks one of its structural invariants."""


class SearchBudgetExceeded(EPFrameError):
    """An exponential exact search ran out of nodes."""


class SearchCounter(object):
    """Callable node counter shared by the budgeted depth-first searches."""

    def __init__(self, budget=SEARCH_BUDGET, what="path search"):
        self.budget = budget
        self.used = 0
        self.what = what

    def __call__(self):
        self.used += 1
        if self.used > self.budget:
            raise SearchBudgetExceeded("{} exceeded its budget of {} nodes"
                                       .format(self.what, self.budget))


# ==============================Variants/Types=================================
@dataclass(frozen=True)
class FrameVariant:
    tag: str = "plain"
    ell: Optional[int] = None

    def __post_init__(self):
        if self.tag not in ("plain", "long", "even"):
            raise PreconditionError("unknown frame variant {!r}".format(self.tag))
        if self.tag == "long" and (self.ell is None or self.ell < 1):
            raise PreconditionError("long frames need ell >= 1")
        if self.tag != "long" and self.ell is not None:
            raise PreconditionError("only long frames take ell")

    def __str__(self):
        return "long:{}".format(self.ell) if self.tag == "long" else self.tag


@dataclass(frozen=True)
class NewComponent:
    path: Path


@dataclass(frozen=True)
class AttachPath:
    path: Path


class Frame(object):
    """
    Forest subgraph of ``g`` with a variant tag.

    Components never merge: a new component is vertex-disjoint from the
    forest and an attachment only touches one forest vertex. Each component
    is therefore keyed by the first vertex of the path that created it, and
    in the even variant that path is kept as the component's witness.
    """

    def __init__(self, g: Graph, A: TerminalSet, variant: FrameVariant):
        self.g = g
        self.A = A
        self.variant = variant
        self.edges = set()
        self.adj: Dict[int, List[Tuple[int, int]]] = {}
        self.comp_of: Dict[int, int] = {}
        self.witnesses: Dict[int, Path] = {}

    @property
    def vertices(self):
        return frozenset(self.adj)

    def __contains__(self, v):
        return v in self.adj

    def degree(self, v):
        return len(self.adj.get(v, ()))

    def leaves(self):
        return sorted(v for v, nbrs in self.adj.items() if len(nbrs) == 1)

    def branch_vertices(self):
        return sorted(v for v, nbrs in self.adj.items() if len(nbrs) == 3)

    def components(self) -> List[Tuple[int, ...]]:
        cells: Dict[int, List[int]] = {}
        for v, key in self.comp_of.items():
            cells.setdefault(key, []).append(v)
        return sorted((tuple(sorted(c)) for c in cells.values()), key=lambda c: c[0])

    def component_key(self, v):
        return self.comp_of[v]

    def component_edges(self, cell):
        cell = set(cell)
        return sorted(eid for eid in self.edges if self.g.edge(eid).u in cell)

    def witness(self, cell):
        return self.witnesses.get(self.comp_of[cell[0]])

    def add_path(self, aug):
        p = aug.path
        if isinstance(aug, NewComponent):
            key = p.first
        else:
            key = self.comp_of[p.last]
        for i, eid in enumerate(p.edges):
            a, b = p.vertices[i], p.vertices[i + 1]
            self.edges.add(eid)
            self.adj.setdefault(a, []).append((b, eid))
            self.adj.setdefault(b, []).append((a, eid))
        for v in p.vertices:
            self.comp_of.setdefault(v, key)
        if isinstance(aug, NewComponent) and self.variant.tag == "even":
            self.witnesses[key] = p

    def distances_from(self, src):
        pairs = [(self.g.edge(eid).u, self.g.edge(eid).v) for eid in self.edges]
        order, parent = breadth_first(list(self.adj), pairs, src)
        dist = {}
        for v in order:
            dist[v] = 0 if parent[v] is None else dist[parent[v]] + 1
        return dist

    def min_leaf_distance(self, v):
        dist = self.distances_from(v)
        leaves = [dist[x] for x in dist if self.degree(x) == 1]
        return min(leaves) if leaves else 0


@dataclass(frozen=True)
class FrameStats:
    c: int
    a_count: int
    U: FrozenSet[int]
    leaves: FrozenSet[int]
    per_component: Tuple[Tuple[int, int], ...]  # (#leaves, #degree-3) per component

    def as_dict(self):
        return {"c": self.c, "a_count": self.a_count,
                "U": sorted(self.U), "leaves": sorted(self.leaves)}
# =============================================================================


# ================================Invariants===================================
def check_frame(frame: Frame):
    """Raise :py:class:`.FrameInvariantError` naming the first broken invariant."""
    g, A = frame.g, frame.A
    n_vertices = len(frame.adj)
    for v, nbrs in frame.adj.items():
        if not nbrs:
            raise FrameInvariantError("isolated frame vertex {}".format(g.name(v)))
        if len(nbrs) > 3:
            raise FrameInvariantError("frame vertex {} has degree {}".format(g.name(v), len(nbrs)))
    if len(frame.edges) != n_vertices - len(frame.components()):
        raise FrameInvariantError("frame contains a cycle")
    for v in frame.adj:
        leaf = frame.degree(v) == 1
        if leaf and v not in A:
            raise FrameInvariantError("leaf {} is not in A".format(g.name(v)))
        if not leaf and v in A:
            raise FrameInvariantError("A-vertex {} is not a leaf".format(g.name(v)))
    for cell in frame.components():
        leaves = [v for v in cell if frame.degree(v) == 1]
        branch = [v for v in cell if frame.degree(v) == 3]
        if len(leaves) - 2 != len(branch):
            raise FrameInvariantError("component at {} has {} leaves but {} degree-3 vertices"
                                      .format(g.name(cell[0]), len(leaves), len(branch)))
        if frame.variant.tag == "long":
            for x in leaves:
                dist = frame.distances_from(x)
                for y in leaves:
                    if y != x and dist[y] < frame.variant.ell:
                        raise FrameInvariantError("leaves {} and {} are at distance {} < {}".format(
                            g.name(x), g.name(y), dist[y], frame.variant.ell))
        if frame.variant.tag == "even":
            w = frame.witness(cell)
            cellset = set(cell)
            if w is None:
                raise FrameInvariantError("component at {} has no witness".format(g.name(cell[0])))
            if (w.length % 2 or w.length < 1 or w.first not in A or w.last not in A
                    or any(v in A for v in w.interior) or not set(w.vertices) <= cellset
                    or not set(w.edges) <= frame.edges):
                raise FrameInvariantError("witness of component at {} is not an even A-path"
                                          .format(g.name(cell[0])))
# =============================================================================


# ===============================Search helpers================================
def _tree_path(g: Graph, parent, v, w, eid):
    vs, es = [w, v], [eid]
    while parent[v] is not None:
        up = parent[v]
        es.append(min(e for x, e in g.steps(v) if x == up))
        vs.append(up)
        v = up
    return Path(tuple(reversed(vs)), tuple(reversed(es)))


def _bfs_targets(g: Graph, start, passable, is_target):
    """Yield paths from ``start`` through passable vertices to each target, shortest first."""
    inner = [v for v in g.vertices if v == start or passable(v)]
    keep = set(inner)
    pairs = [(e.u, e.v) for e in g.edges if e.u in keep and e.v in keep]
    order, parent = breadth_first(inner, pairs, start)
    seen = {start}
    for v in order:
        for w, eid in g.steps(v):
            if w in seen or w in keep or not is_target(w):
                continue
            seen.add(w)
            yield _tree_path(g, parent, v, w, eid)


def _parity_reach(g: Graph, passable, targets):
    """
    Set of (vertex, r) such that some walk from the passable vertex to a
    target has length congruent to r mod 2. Walks relax simple paths, so a
    missing state proves no simple path with that parity exists.
    """
    reach = set((t, 0) for t in targets)
    queue = deque(reach)
    while queue:
        w, r = queue.popleft()
        for v, _ in g.steps(w):
            if passable(v) and (v, r ^ 1) not in reach:
                reach.add((v, r ^ 1))
                queue.append((v, r ^ 1))
    return reach


def _new_component(g, A, frame, variant, counter):
    free = [a for a in A if a not in frame]
    if len(free) < 2:
        return None

    def passable(v):
        return v not in frame and v not in A

    def is_target(v):
        return v in A and v not in frame

    reach = _parity_reach(g, passable, free) if variant.tag == "even" else None
    for a in free:
        if variant.tag == "plain":
            for p in _bfs_targets(g, a, passable, is_target):
                return NewComponent(p)
            continue
        if variant.tag == "long":
            shortest = next(_bfs_targets(g, a, passable, is_target), None)
            if shortest is None:
                continue
            if shortest.length >= variant.ell:
                return NewComponent(shortest)
            for vs, es in simple_paths(g, a, passable, is_target, tick=counter):
                if len(es) >= variant.ell:
                    return NewComponent(Path(vs, es))
            continue

        def admit(w, length):
            if is_target(w):
                return length % 2 == 0
            return (w, length % 2) in reach

        for vs, es in simple_paths(g, a, passable, is_target, tick=counter, admit=admit):
            if len(es) % 2 == 0:
                return NewComponent(Path(vs, es))
    return None


def _attach_path(g, A, frame, variant, counter):
    free = [a for a in A if a not in frame]
    if not free or not frame.adj:
        return None

    def passable(v):
        return v not in frame and v not in A

    def is_target(v):
        return v in frame and frame.degree(v) == 2 and v not in A

    def stops(v):
        return v in frame

    need = {}
    if variant.tag == "long":
        for v in frame.adj:
            if is_target(v):
                need[v] = max(1, variant.ell - frame.min_leaf_distance(v))
    for a in free:
        if variant.tag != "long":
            for p in _bfs_targets(g, a, passable, is_target):
                return AttachPath(p)
            continue
        found = False
        for p in _bfs_targets(g, a, passable, is_target):
            found = True
            if p.length >= need[p.last]:
                return AttachPath(p)
        if not found:
            continue
        for vs, es in simple_paths(g, a, passable, stops, tick=counter):
            if is_target(vs[-1]) and len(es) >= need[vs[-1]]:
                return AttachPath(Path(vs, es))
    return None
# =============================================================================


# ==============================Public operations==============================
def find_augmentation(g: Graph, A: TerminalSet, frame: Frame, variant: Optional[FrameVariant] = None,
                      lab=None, budget=SEARCH_BUDGET, check=True):
    """
    Return a :py:class:`.NewComponent` or :py:class:`.AttachPath` that keeps
    every frame invariant, or ``None`` when the frame is maximal.

    ``lab`` is accepted for symmetry with the other variants; the even
    variant works on lengths directly. Exhausting ``budget`` raises
    :py:class:`.SearchBudgetExceeded`.
    """
    variant = variant or frame.variant
    if variant != frame.variant:
        raise PreconditionError("frame variant {} does not match {}".format(frame.variant, variant))
    if check:
        check_frame(frame)
    counter = SearchCounter(budget, "{} augmentation search".format(variant))
    aug = _new_component(g, A, frame, variant, counter)
    if aug is None:
        aug = _attach_path(g, A, frame, variant, counter)
    return aug


def construct_frame(g: Graph, A: TerminalSet, variant: FrameVariant = FrameVariant(),
                    lab=None, budget=SEARCH_BUDGET) -> Frame:
    if g.directed:
        raise PreconditionError("frames are built on undirected graphs")
    if g.has_loops():
        raise PreconditionError("frames are built on loop-free graphs")
    frame = Frame(g, A, variant)
    while True:
        aug = find_augmentation(g, A, frame, variant, lab, budget, check=False)
        if aug is None:
            break
        _logger.debug("%s: %s via %s", variant, type(aug).__name__,
                      "-".join(g.name(v) for v in aug.path.vertices))
        frame.add_path(aug)
    check_frame(frame)
    return frame


def frame_stats(frame: Frame) -> FrameStats:
    leaves = frozenset(frame.leaves())
    U = frozenset(frame.branch_vertices())
    cells = frame.components()
    per = tuple((sum(1 for v in c if v in leaves), sum(1 for v in c if v in U)) for c in cells)
    a_count = sum(1 for v in frame.adj if v in frame.A)
    return FrameStats(len(cells), a_count, U, leaves, per)


def dump_frame(g: Graph, A: TerminalSet, frame: Frame) -> str:
    sub, remap = g.subgraph(frame.adj.keys(), frame.edges)
    subA = TerminalSet(tuple(remap[v] for v in frame.adj if v in A))
    stats = frame_stats(frame)
    header = "frame variant={} c={} a_count={} U={}".format(
        frame.variant, stats.c, stats.a_count, len(stats.U))
    return serialize_graph(sub, subA, comments=[header])
# =============================================================================
