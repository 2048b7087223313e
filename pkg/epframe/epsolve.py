# =============================================================================
# ~/epframe/epframe/epsolve.py
#
# created  18 October 2026
# modified
#
# This py-file contains the dichotomy solvers. Each returns a Certificate:
# either k disjoint target paths or a hitting set within the variant's bound.
#
# +------------+--------------------+-----------------------------+
# | variant    | target             | hitting set bound           |
# +------------+--------------------+-----------------------------+
# | gallai     | A-paths            | 4k (vertices)               |
# | long       | A-paths of len>=l  | 4kl (vertices)              |
# | even       | even A-paths       | 10k (vertices)              |
# | mader-edge | A-paths, edge-disj | k*ceil(log2 |A|) (edges)    |
# +------------+--------------------+-----------------------------+
#
# =============================================================================
"""
Dichotomy solvers
~~~~~~~~~~~~~~~~~

+-------------------------------------+-------------------------------------------+
|      Name                           |        Purpose                            |
+=====================================+===========================================+
|:py:class:`.Certificate`             |solver output and its JSON document form   |
+-------------------------------------+-------------------------------------------+
|:py:func:`.solve_gallai`             |plain frame, 4k vertex bound               |
+-------------------------------------+-------------------------------------------+
|:py:func:`.solve_long`               |long(ell) frame, 4k*ell vertex bound       |
+-------------------------------------+-------------------------------------------+
|:py:func:`.solve_even`               |even frame, 10k vertex bound               |
+-------------------------------------+-------------------------------------------+
|:py:func:`.solve_mader_edge`         |Menger bisection, k*ceil(log2 abs(A)) edges|
+-------------------------------------+-------------------------------------------+
|:py:func:`.mader_rounds`             |bisection rounds with their cut states     |
+-------------------------------------+-------------------------------------------+
|:py:func:`.solve`                    |dispatch by variant name                   |
+-------------------------------------+-------------------------------------------+

"""

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from epframe.extract import Tree, leaf_pair_paths, even_component_paths, tree_edge_disjoint_apaths
from epframe.frame import SEARCH_BUDGET, FrameVariant, construct_frame, frame_stats
from epframe.graph import EPFrameError, Graph, Path, TerminalSet, components, spanning_forest
from epframe.labeling import PathSpec
from epframe.menger import max_edge_disjoint_paths

_logger = logging.getLogger("epframe.epsolve")

VARIANTS = ("gallai", "long", "even", "mader-edge")


class SolverError(EPFrameError):
    """A solver was called outside its preconditions."""


class BoundViolation(SolverError):
    """Hitting set arithmetic broke the proof's inequality."""


class CertificateError(EPFrameError):
    """A certificate document does not fit the graph it is read against."""


# ===============================Certificates==================================
@dataclass
class Certificate:
    variant: str
    k: int
    outcome: str
    claimed_bound: int
    ell: Optional[int] = None
    paths: Tuple[Path, ...] = ()
    hitting_type: Optional[str] = None
    hitting: Tuple[int, ...] = ()
    diagnostics: Dict = field(default_factory=dict)

    @property
    def spec(self) -> PathSpec:
        return variant_spec(self.variant, self.ell)

    def to_document(self, g: Graph) -> str:
        doc = {"variant": self.variant, "k": self.k}
        if self.ell is not None:
            doc["ell"] = self.ell
        doc["outcome"] = self.outcome
        doc["paths"] = [[g.name(v) for v in p.vertices] for p in self.paths]
        if self.outcome == "hitting":
            if self.hitting_type == "edge":
                items = ["{} {}".format(g.name(g.edge(e).u), g.name(g.edge(e).v)) for e in self.hitting]
            else:
                items = [g.name(v) for v in self.hitting]
            doc["hitting"] = {"type": self.hitting_type, "items": items}
        else:
            doc["hitting"] = None
        doc["claimed_bound"] = self.claimed_bound
        doc["diagnostics"] = self.diagnostics
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_document(cls, text: str, g: Graph) -> "Certificate":
        """
        Read a certificate against ``g``. Edges are named by their endpoints;
        among parallel edges the smallest unused id is taken, which is exact
        for the solvers' hitting sets because a cut always contains whole
        bundles of parallel edges.
        """
        try:
            doc = json.loads(text)
        except ValueError as err:
            raise CertificateError("certificate is not valid JSON: {}".format(err))
        if not isinstance(doc, dict):
            raise CertificateError("certificate must be a JSON object")
        for key in ("variant", "k", "outcome", "paths", "claimed_bound"):
            if key not in doc:
                raise CertificateError("certificate lacks field {!r}".format(key))
        if doc["variant"] not in VARIANTS:
            raise CertificateError("unknown variant {!r}".format(doc["variant"]))
        if doc["outcome"] not in ("paths", "hitting"):
            raise CertificateError("outcome must be paths or hitting")
        for key in ("k", "claimed_bound", "ell"):
            if doc.get(key) is not None and (not isinstance(doc[key], int) or isinstance(doc[key], bool)):
                raise CertificateError("field {!r} must be an integer".format(key))
        if not isinstance(doc["paths"], list) or not all(isinstance(p, list) for p in doc["paths"]):
            raise CertificateError("paths must be a list of vertex-name lists")

        def vertex(name):
            if not isinstance(name, str) or not g.has_vertex_name(name):
                raise CertificateError("unknown vertex {!r}".format(name))
            return g.index(name)

        used = set()

        def edge(a, b, oriented=False):
            free = [e for e in g.edges_between(a, b, oriented=oriented) if e not in used]
            if not free:
                raise CertificateError("no unused edge between {} and {}".format(g.name(a), g.name(b)))
            used.add(free[0])
            return free[0]

        edge_disjoint = doc["variant"] == "mader-edge"
        paths = []
        for names in doc["paths"]:
            vs = tuple(vertex(n) for n in names)
            es = []
            for a, b in zip(vs, vs[1:]):
                if edge_disjoint:
                    es.append(edge(a, b))
                else:
                    between = g.edges_between(a, b)
                    if not between:
                        raise CertificateError("no edge between {} and {}".format(g.name(a), g.name(b)))
                    es.append(min(between))
            paths.append(Path(vs, tuple(es)))
        htype, items = None, ()
        if doc["outcome"] == "hitting":
            hitting = doc.get("hitting") or {}
            htype = hitting.get("type") if isinstance(hitting, dict) else None
            if htype not in ("vertex", "edge"):
                raise CertificateError("hitting type must be vertex or edge")
            used = set()
            if htype == "vertex":
                items = tuple(vertex(n) for n in hitting.get("items", []))
            else:
                pairs = []
                for item in hitting.get("items", []):
                    parts = str(item).split()
                    if len(parts) != 2:
                        raise CertificateError("edge item {!r} is not a 'u v' pair".format(item))
                    pairs.append(edge(vertex(parts[0]), vertex(parts[1]), oriented=g.directed))
                items = tuple(pairs)
        return cls(variant=doc["variant"], k=int(doc["k"]), outcome=doc["outcome"],
                   claimed_bound=int(doc["claimed_bound"]), ell=doc.get("ell"),
                   paths=tuple(paths), hitting_type=htype, hitting=items,
                   diagnostics=doc.get("diagnostics") or {})


def variant_spec(variant: str, ell: Optional[int] = None) -> PathSpec:
    if variant == "gallai":
        return PathSpec("plain")
    if variant == "long":
        return PathSpec("long", ell=ell)
    if variant == "even":
        return PathSpec("even")
    if variant == "mader-edge":
        return PathSpec("plain", disjointness="edge")
    raise SolverError("unknown variant {!r}".format(variant))


def ceil_log2(n):
    return 0 if n <= 1 else math.ceil(math.log2(n))


def claimed_bound(variant, k, ell=None, a_size=0):
    if variant == "gallai":
        return 4 * k
    if variant == "long":
        return 4 * k * ell
    if variant == "even":
        return 10 * k
    return k * ceil_log2(a_size)
# =============================================================================


# =================================Helpers=====================================
def _check_input(g: Graph, k: int):
    if k < 1:
        raise SolverError("k must be >= 1, got {}".format(k))
    if g.directed:
        raise SolverError("solvers need an undirected graph")
    if g.has_loops():
        raise SolverError("solvers need a loop-free graph")


def _frame_diagnostics(g, stats, branch):
    return {"branch": branch, "c": stats.c, "a_count": stats.a_count,
            "U": [g.name(v) for v in sorted(stats.U)],
            "leaves": [g.name(v) for v in sorted(stats.leaves)]}


def _component_trees(frame):
    return [Tree.from_frame_component(frame, cell) for cell in frame.components()]


def _leaf_paths(frame, k, c):
    trees = _component_trees(frame)
    if c >= k:
        return [leaf_pair_paths(t)[0] for t in trees[:k]]
    paths = []
    for t in trees:
        paths.extend(leaf_pair_paths(t))
    return paths[:k]


def _paths_certificate(variant, k, ell, paths, bound, diagnostics):
    if len(paths) < k:
        raise BoundViolation("{} solver produced {} < k = {} paths".format(variant, len(paths), k))
    return Certificate(variant=variant, k=k, ell=ell, outcome="paths", claimed_bound=bound,
                       paths=tuple(paths[:k]), diagnostics=diagnostics)


def _hitting_certificate(variant, k, ell, htype, items, bound, diagnostics, strict):
    size = len(items)
    if (strict and size >= bound and size > 0) or size > bound:
        raise BoundViolation("{} hitting set of size {} breaks the bound {}".format(variant, size, bound))
    return Certificate(variant=variant, k=k, ell=ell, outcome="hitting", claimed_bound=bound,
                       hitting_type=htype, hitting=tuple(sorted(items)), diagnostics=diagnostics)
# =============================================================================


# =================================Solvers=====================================
def solve_gallai(g: Graph, A: TerminalSet, k: int) -> Certificate:
    _check_input(g, k)
    frame = construct_frame(g, A, FrameVariant("plain"))
    stats = frame_stats(frame)
    a, c = stats.a_count, stats.c
    bound = claimed_bound("gallai", k)
    if c >= k or (a >= 2 * k + c and a > 0):
        _logger.info("gallai: c=%d, |A cap V(F)|=%d, extracting paths", c, a)
        return _paths_certificate("gallai", k, None, _leaf_paths(frame, k, c), bound,
                                  _frame_diagnostics(g, stats, "paths"))
    X = set(stats.leaves) | set(stats.U)
    if len(X) != 2 * a - 2 * c:
        raise BoundViolation("|X| = {} differs from 2|A cap V(F)| - 2c = {}".format(len(X), 2 * a - 2 * c))
    _logger.info("gallai: hitting set of size %d (< %d)", len(X), bound)
    return _hitting_certificate("gallai", k, None, "vertex", X, bound,
                                _frame_diagnostics(g, stats, "hitting"), strict=True)


def solve_long(g: Graph, A: TerminalSet, k: int, ell: int, budget=SEARCH_BUDGET) -> Certificate:
    _check_input(g, k)
    if ell is None or ell < 1:
        raise SolverError("ell must be >= 1")
    frame = construct_frame(g, A, FrameVariant("long", ell), budget=budget)
    stats = frame_stats(frame)
    a, c = stats.a_count, stats.c
    bound = claimed_bound("long", k, ell)
    if c >= k or (a >= 2 * k + c and a > 0):
        _logger.info("long(%d): c=%d, |A cap V(F)|=%d, extracting paths", ell, c, a)
        return _paths_certificate("long", k, ell, _leaf_paths(frame, k, c), bound,
                                  _frame_diagnostics(g, stats, "paths"))
    X = set(stats.U)
    for leaf in stats.leaves:
        X.update(v for v, d in frame.distances_from(leaf).items() if d <= ell - 1)
    _logger.info("long(%d): hitting set of size %d (< %d)", ell, len(X), bound)
    return _hitting_certificate("long", k, ell, "vertex", X, bound,
                                _frame_diagnostics(g, stats, "hitting"), strict=True)


def solve_even(g: Graph, A: TerminalSet, k: int, budget=SEARCH_BUDGET) -> Certificate:
    _check_input(g, k)
    frame = construct_frame(g, A, FrameVariant("even"), budget=budget)
    stats = frame_stats(frame)
    a, c = stats.a_count, stats.c
    bound = claimed_bound("even", k)
    if c >= k:
        _logger.info("even: %d components, returning their witnesses", c)
        witnesses = [frame.witness(cell) for cell in frame.components()]
        return _paths_certificate("even", k, None, witnesses, bound,
                                  _frame_diagnostics(g, stats, "witnesses"))
    if a >= 4 * k + 2 * c and a > 0:
        _logger.info("even: |A cap V(F)|=%d >= 4k+2c=%d, bipartition extraction", a, 4 * k + 2 * c)
        paths = []
        for t in _component_trees(frame):
            paths.extend(even_component_paths(t, A))
        return _paths_certificate("even", k, None, paths, bound,
                                  _frame_diagnostics(g, stats, "paths"))
    X = set(stats.leaves) | set(stats.U)
    _logger.info("even: hitting set of size %d (<= %d)", len(X), bound)
    return _hitting_certificate("even", k, None, "vertex", X, bound,
                                _frame_diagnostics(g, stats, "hitting"), strict=False)


@dataclass
class MaderState:
    round: int
    partition: List[Tuple[int, ...]]
    X: set


def _bisect(partition):
    first, second = [], []
    for cell in partition:
        half = (len(cell) + 1) // 2
        first.append(cell[:half])
        if cell[half:]:
            second.append(cell[half:])
    return first, second


def mader_rounds(g: Graph, members, k):
    """
    Yield ``(round, state, packing)`` for each bisection round of the edge
    version. The state advances only while a packing stays below ``k``;
    after such a round no path of ``g - state.X`` joins two cells of
    ``state.partition``. A packing of ``k`` or more ends the rounds.
    """
    state = MaderState(0, [tuple(members)], set())
    for i in range(1, ceil_log2(len(members)) + 1):
        first, second = _bisect(state.partition)
        S = {v for cell in first for v in cell}
        T = {v for cell in second for v in cell}
        pair = max_edge_disjoint_paths(g, S, T, forbidden=state.X)
        if pair.value >= k:
            yield i, state, pair
            return
        state = MaderState(i, first + second, state.X | set(pair.cut))
        yield i, state, pair


def _trim_to_apath(p: Path, A) -> Path:
    for j in range(1, len(p.vertices)):
        if p.vertices[j] in A:
            return Path(p.vertices[:j + 1], p.edges[:j])
    return p


def solve_mader_edge(g: Graph, A: TerminalSet, k: int) -> Certificate:
    """
    Edge version. A spanning forest with many A-vertices in one tree gives
    k edge-disjoint A-paths directly; otherwise A is bisected for
    ceil(log2 |A|) rounds, each round either packing k edge-disjoint paths
    between the two halves or cutting them apart with at most k-1 edges.
    """
    _check_input(g, k)
    members = list(A)
    bound = claimed_bound("mader-edge", k, a_size=len(members))
    diagnostics = {"statement_bound": round(2 * k * math.log2(k), 6),
                   "proof_bound": bound, "rounds": [], "branch": None}
    forest = spanning_forest(g)
    tree_paths = []
    for cell in components(g):
        inside = set(cell)
        if sum(1 for v in cell if v in A) < 2:
            continue
        t = Tree.from_graph(g, cell, [eid for eid in forest if g.edge(eid).u in inside])
        tree_paths.extend(tree_edge_disjoint_apaths(t, A))
    if len(tree_paths) >= k:
        _logger.info("mader-edge: spanning forest yields %d edge-disjoint A-paths", len(tree_paths))
        diagnostics["branch"] = "tree"
        return _paths_certificate("mader-edge", k, None, tree_paths, bound, diagnostics)

    state = MaderState(0, [tuple(members)], set())
    for i, state, pair in mader_rounds(g, members, k):
        diagnostics["rounds"].append({"round": i, "packing": pair.value})
        if pair.value >= k:
            _logger.info("mader-edge: round %d packs %d edge-disjoint paths", i, pair.value)
            diagnostics["branch"] = "menger"
            paths = [_trim_to_apath(p, A) for p in pair.paths]
            return _paths_certificate("mader-edge", k, None, paths, bound, diagnostics)
    diagnostics["branch"] = "hitting"
    diagnostics["X"] = len(state.X)
    _logger.info("mader-edge: edge hitting set of size %d after %d rounds", len(state.X), state.round)
    return _hitting_certificate("mader-edge", k, None, "edge", state.X, bound, diagnostics, strict=False)


SOLVERS = {"gallai": solve_gallai, "long": solve_long, "even": solve_even,
           "mader-edge": solve_mader_edge}


def solve(variant: str, g: Graph, A: TerminalSet, k: int, ell: Optional[int] = None,
          budget=SEARCH_BUDGET) -> Certificate:
    if variant not in SOLVERS:
        raise SolverError("unknown variant {!r}".format(variant))
    if variant == "long":
        if ell is None:
            raise SolverError("variant long needs ell")
        return solve_long(g, A, k, ell, budget=budget)
    if ell is not None:
        raise SolverError("only variant long takes ell")
    if variant == "even":
        return solve_even(g, A, k, budget=budget)
    return SOLVERS[variant](g, A, k)
# =============================================================================
