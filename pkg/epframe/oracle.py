# =============================================================================
# ~/epframe/epframe/oracle.py
#
# created  18 October 2026
# modified
#
# This py-file contains the exhaustive engines used as ground truth:
# path enumeration, exact maximum packings, exact minimum hitting sets,
# certificate verification and comb recognition.
#
# note: Everything here is brute force on purpose. Budgets bound the work
#       and running out of budget is always raised, never truncated.
#
# =============================================================================
"""
Oracle
~~~~~~

+--------------------------------------+---------------------------------------------+
|      Name                            |        Purpose                              |
+======================================+=============================================+
|:py:class:`.Budget`                   |vertex cap and search-node cap               |
+--------------------------------------+---------------------------------------------+
|:py:func:`.enumerate_paths`           |every target path once, canonically oriented |
+--------------------------------------+---------------------------------------------+
|:py:func:`.max_disjoint`              |exact packing number with a witness          |
+--------------------------------------+---------------------------------------------+
|:py:func:`.min_hitting_set`           |exact covering number, searched by size      |
+--------------------------------------+---------------------------------------------+
|:py:func:`.verify_certificate`        |list every violated certificate clause       |
+--------------------------------------+---------------------------------------------+
|:py:func:`.is_comb`                   |recognize subdivided elementary combs        |
+--------------------------------------+---------------------------------------------+

"""

import logging
import os
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from epframe.epsolve import Certificate, claimed_bound
from epframe.extract import ExtractionError, Tree
from epframe.graph import (EPFrameError, Graph, InvalidPathError, Path, PreconditionError, TerminalSet,
                           simple_paths, validate_path)
from epframe.labeling import PathSpec, spec_violations

_logger = logging.getLogger("epframe.oracle")

__all__ = ["Budget", "OracleBudgetExceeded", "PathSpec", "Report", "enumerate_paths",
           "max_disjoint", "min_hitting_set", "verify_certificate", "is_comb", "elementary_comb"]


class OracleBudgetExceeded(EPFrameError):
    """The instance or the search is larger than the configured budget."""


# =================================Budgets=====================================
@dataclass(frozen=True)
class Budget:
    max_vertices: Optional[int] = 20
    max_nodes: int = 10 ** 6

    @classmethod
    def from_environment(cls):
        """``EPFRAME_BUDGET`` sets the node budget and lifts the vertex cap."""
        value = os.environ.get("EPFRAME_BUDGET")
        if not value:
            return cls()
        return cls.from_nodes(value)

    @classmethod
    def from_nodes(cls, value):
        try:
            nodes = int(value)
        except (TypeError, ValueError):
            raise PreconditionError("budget must be a positive integer, got {!r}".format(value))
        if nodes < 1:
            raise PreconditionError("budget must be a positive integer, got {!r}".format(value))
        return cls(max_vertices=None, max_nodes=nodes)

    def check_size(self, g: Graph):
        if self.max_vertices is not None and g.n > self.max_vertices:
            raise OracleBudgetExceeded("graph has {} vertices, the oracle budget allows {}"
                                       .format(g.n, self.max_vertices))

    def counter(self, what):
        return _NodeCounter(self.max_nodes, what)


class _NodeCounter(object):
    def __init__(self, limit, what):
        self.limit = limit
        self.used = 0
        self.what = what

    def __call__(self):
        self.used += 1
        if self.used > self.limit:
            raise OracleBudgetExceeded("{} exceeded the budget of {} nodes".format(self.what, self.limit))
# =============================================================================


# ================================Enumeration==================================
def _canonical(spec: PathSpec, A, p: Path) -> Path:
    if spec.oriented:
        return p
    rev = p.reversed()
    if spec.is_ab:
        fwd_ok, rev_ok = p.first in A, rev.first in A
        if fwd_ok and not rev_ok:
            return p
        if rev_ok and not fwd_ok:
            return rev
    return p if (p.first, p.vertices) <= (rev.first, rev.vertices) else rev


def enumerate_paths(g: Graph, A: TerminalSet, B: Optional[TerminalSet], lab, spec: PathSpec,
                    budget: Optional[Budget] = None) -> List[Path]:
    """All simple paths of kind ``spec``, each once up to reversal (directed kinds keep orientation)."""
    budget = budget or Budget()
    spec.check_inputs(g, B, lab)
    budget.check_size(g)
    counter = budget.counter("path enumeration")
    if spec.is_ab:
        def terminal(v):
            return v in B or v in A

        def passable(v):
            return v not in A and v not in B
    else:
        def terminal(v):
            return v in A

        def passable(v):
            return v not in A

    found = {}
    for a in A:
        for vs, es in simple_paths(g, a, passable, terminal, tick=counter, oriented=spec.oriented):
            p = Path(vs, es)
            if spec_violations(spec, g, A, B, lab, p):
                continue
            c = _canonical(spec, A, p)
            found.setdefault((c.vertices, c.edges), c)
    paths = [found[key] for key in sorted(found)]
    _logger.debug("enumerated %d %s paths in %d nodes", len(paths), spec, counter.used)
    return paths


def _mask(spec_mode, p: Path):
    items = p.vertices if spec_mode == "vertex" else p.edges
    m = 0
    for x in items:
        m |= 1 << x
    return m


def _minimal(masks):
    """Drop duplicate masks and masks containing another one; keeps first witnesses."""
    order = sorted(range(len(masks)), key=lambda i: (bin(masks[i]).count("1"), masks[i], i))
    kept = []
    for i in order:
        m = masks[i]
        if any(q & m == q for q, _ in kept):
            continue
        kept.append((m, i))
    return kept
# =============================================================================


# =================================Packing=====================================
def max_disjoint(g: Graph, A: TerminalSet, B: Optional[TerminalSet], lab, spec: PathSpec,
                 limit: Optional[int] = None, budget: Optional[Budget] = None) -> Tuple[int, List[Path]]:
    """
    Exact maximum number of pairwise disjoint spec-paths (vertex- or
    edge-disjoint per ``spec.disjointness``), capped at ``limit``.
    Branch and bound over inclusion-minimal path footprints.
    """
    budget = budget or Budget()
    paths = enumerate_paths(g, A, B, lab, spec, budget)
    mode = spec.disjointness
    kept = _minimal([_mask(mode, p) for p in paths])
    masks = [m for m, _ in kept]
    witnesses = [paths[i] for _, i in kept]
    terminals = set(A) | (set(B) if B is not None else set())
    if mode == "vertex":
        weight = {v: 1 for v in terminals}
    else:
        weight = {}
        for e in g.edges:
            w = (e.u in terminals) + (e.v in terminals)
            if w:
                weight[e.id] = w
    counter = budget.counter("packing search")
    cap = len(masks) if limit is None else min(limit, len(masks))
    best = {"size": 0, "chosen": ()}

    def free_weight(used):
        return sum(w for x, w in weight.items() if not used >> x & 1)

    def search(start, used, chosen):
        counter()
        if len(chosen) > best["size"]:
            best["size"], best["chosen"] = len(chosen), tuple(chosen)
        if best["size"] >= cap:
            return
        compatible = [j for j in range(start, len(masks)) if not masks[j] & used]
        bound = len(chosen) + min(len(compatible), free_weight(used) // 2)
        if bound <= best["size"]:
            return
        for j in compatible:
            if masks[j] & used:
                continue
            chosen.append(j)
            search(j + 1, used | masks[j], chosen)
            chosen.pop()
            if best["size"] >= cap:
                return

    search(0, 0, [])
    family = [witnesses[j] for j in best["chosen"]]
    _logger.debug("max_disjoint %s (%s): %d", spec, mode, best["size"])
    return best["size"], family
# =============================================================================


# =================================Covering====================================
def min_hitting_set(g: Graph, A: TerminalSet, B: Optional[TerminalSet], lab, spec: PathSpec,
                    mode: str = "vertex", cap: Optional[int] = None,
                    budget: Optional[Budget] = None):
    """
    Minimum vertex (or edge) set meeting every spec-path, as a frozenset of
    ids, or ``None`` when no such set of size at most ``cap`` exists.
    Sizes are tried in increasing order, so the first hit is minimum.
    """
    if mode not in ("vertex", "edge"):
        raise ValueError("mode must be vertex or edge")
    budget = budget or Budget()
    paths = enumerate_paths(g, A, B, lab, spec, budget)
    masks = [m for m, _ in _minimal([_mask(mode, p) for p in paths])]
    if not masks:
        return frozenset()
    universe = g.n if mode == "vertex" else g.m
    cap = universe if cap is None else min(cap, universe)
    counter = budget.counter("hitting set search")

    def lower_bound(unhit):
        used, count = 0, 0
        for m in unhit:
            if not m & used:
                used |= m
                count += 1
        return count

    def search(hit, chosen, room):
        counter()
        unhit = [m for m in masks if not m & hit]
        if not unhit:
            return chosen
        if room <= 0 or lower_bound(unhit) > room:
            return None
        first = unhit[0]
        x = 0
        while first >> x:
            if first >> x & 1:
                found = search(hit | (1 << x), chosen + [x], room - 1)
                if found is not None:
                    return found
            x += 1
        return None

    for size in range(lower_bound(masks), cap + 1):
        found = search(0, [], size)
        if found is not None:
            _logger.debug("min_hitting_set %s (%s): %d", spec, mode, len(found))
            return frozenset(found)
    return None
# =============================================================================


# ================================Verification=================================
@dataclass
class Report:
    violations: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations


def _path_text(g, p):
    return "-".join(g.name(v) for v in p.vertices)


def verify_certificate(g: Graph, A: TerminalSet, B: Optional[TerminalSet], lab,
                       cert: Certificate, budget: Optional[Budget] = None) -> Report:
    budget = budget or Budget()
    report = Report()
    if cert.variant == "long" and (not isinstance(cert.ell, int) or cert.ell < 1):
        report.violations.append("long certificate needs ell >= 1, got {!r}".format(cert.ell))
        return report
    try:
        spec = cert.spec
    except EPFrameError as err:
        report.violations.append(str(err))
        return report
    if cert.outcome == "paths":
        valid = []
        for i, p in enumerate(cert.paths):
            try:
                validate_path(g, p)
            except InvalidPathError as err:
                report.violations.append("path {}: {}".format(i, err))
                continue
            for clause in spec_violations(spec, g, A, B, lab, p):
                report.violations.append("path {} ({}): {}".format(i, _path_text(g, p), clause))
            valid.append((i, p))
        for x in range(len(valid)):
            for y in range(x + 1, len(valid)):
                (i, p), (j, q) = valid[x], valid[y]
                if spec.disjointness == "vertex":
                    shared = sorted(set(p.vertices) & set(q.vertices))
                    what = "vertex"
                    names = [g.name(v) for v in shared]
                else:
                    shared = sorted(set(p.edges) & set(q.edges))
                    what = "edge"
                    names = [str(e) for e in shared]
                if shared:
                    report.violations.append("paths {} and {} share {} {}".format(i, j, what, names[0]))
        if len(cert.paths) < cert.k:
            report.violations.append("only {} paths, need k = {}".format(len(cert.paths), cert.k))
        return report

    expected_type = "edge" if cert.variant == "mader-edge" else "vertex"
    if cert.hitting_type != expected_type:
        report.violations.append("hitting set type {} should be {}".format(cert.hitting_type, expected_type))
    bound = claimed_bound(cert.variant, cert.k, cert.ell, len(A))
    if cert.claimed_bound > bound:
        report.violations.append("claimed bound {} exceeds the {} bound {}"
                                 .format(cert.claimed_bound, cert.variant, bound))
    if len(cert.hitting) > cert.claimed_bound:
        report.violations.append("hitting set size {} exceeds claimed bound {}"
                                 .format(len(cert.hitting), cert.claimed_bound))
    items = set(cert.hitting)
    try:
        paths = enumerate_paths(g, A, B, lab, spec, budget)
    except OracleBudgetExceeded as err:
        report.notes.append("coverage not checked: {}".format(err))
        return report
    for p in paths:
        footprint = p.vertices if cert.hitting_type == "vertex" else p.edges
        if not items.intersection(footprint):
            report.violations.append("path {} avoids the hitting set".format(_path_text(g, p)))
            break
    report.notes.append("coverage checked against {} paths".format(len(paths)))
    return report
# =============================================================================


# ===================================Combs=====================================
def elementary_comb(ell: int) -> Tuple[Graph, TerminalSet]:
    """Path p0..p_ell with a pendant tooth t_i at every internal p_i; leaves form A."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    names = ["p{}".format(i) for i in range(ell + 1)] + ["t{}".format(i) for i in range(1, ell)]
    pairs = [(i, i + 1) for i in range(ell)]
    pairs += [(i, ell + i) for i in range(1, ell)]
    leaves = [0, ell] + [ell + i for i in range(1, ell)]
    return Graph(names, pairs), TerminalSet(tuple(leaves))


def is_comb(g: Graph, A, ell: int, vertices=None, edges=None) -> bool:
    """
    True iff the subgraph (default: all of ``g``) is a subdivided elementary
    ``ell``-comb whose A-vertices are exactly its leaves.
    """
    if ell < 1:
        return False
    vertices = list(g.vertices) if vertices is None else list(vertices)
    keep = set(vertices)
    if edges is None:
        edges = [e.id for e in g.edges if e.u in keep and e.v in keep]
    try:
        t = Tree(keep, ((eid, g.edge(eid).u, g.edge(eid).v) for eid in edges))
        t.check()
    except ExtractionError:
        return False
    leaves = set(t.leaves())
    if len(leaves) != ell + 1:
        return False
    if {v for v in keep if v in A} != leaves:
        return False
    if any(t.degree(v) not in (1, 2, 3) for v in keep):
        return False
    spine = [v for v in keep if t.degree(v) == 3]
    if len(spine) != ell - 1:
        return False
    if not spine:
        return True
    # spine vertices joined through degree-2 runs must form a path
    spine_set = set(spine)
    spine_adj = {v: set() for v in spine}
    for x in spine:
        for w, _ in t.adj[x]:
            prev, cur = x, w
            while t.degree(cur) == 2:
                a, b = (n for n, _ in t.adj[cur])
                prev, cur = cur, (b if a == prev else a)
            if cur in spine_set:
                spine_adj[x].add(cur)
    if any(len(n) > 2 for n in spine_adj.values()):
        return False
    edges_in_spine = sum(len(n) for n in spine_adj.values()) // 2
    return edges_in_spine == len(spine) - 1
# =============================================================================
