# =============================================================================
# ~/epframe/epframe/gallery.py
#
# created  18 October 2026
# modified
#
# This py-file contains deterministic generators for the lower-bound and
# counterexample families, plus a seeded random instance generator.
#
# note: Edges of prescribed length are materialized as paths of unit edges;
#       subdivision vertices are named <prefix>.<k>.
#
# =============================================================================
"""
Instance gallery
~~~~~~~~~~~~~~~~

+-----------------------------------------------+---------------------------------------------+
|      Generator                                |        Family                               |
+===============================================+=============================================+
|:py:func:`.gen_clique_a`                       |K_(2k-1), all vertices in A                  |
+-----------------------------------------------+---------------------------------------------+
|:py:func:`.gen_long_lb`                        |k-1 cliques K_(2l-3) matched into A          |
+-----------------------------------------------+---------------------------------------------+
|:py:func:`.gen_grid_mod`                       |subdivided grid for lengths d mod m          |
+-----------------------------------------------+---------------------------------------------+
|:py:func:`.gen_wall_aba`                       |wall, A left/right, B top row                |
+-----------------------------------------------+---------------------------------------------+
|:py:func:`.gen_wall_parity`                    |wall with grey parity edges                  |
+-----------------------------------------------+---------------------------------------------+
|:py:func:`.gen_zero_label_wall`                |wall with a group labeling                   |
+-----------------------------------------------+---------------------------------------------+
|:py:func:`.gen_directed_grid`                  |alternating directed grid                    |
+-----------------------------------------------+---------------------------------------------+
|:py:func:`.gen_even_abpath_counterexample`     |grid for even (or odd) A-B-paths            |
+-----------------------------------------------+---------------------------------------------+
|:py:func:`.gen_random`                         |seeded G(n, p) with random A                 |
+-----------------------------------------------+---------------------------------------------+

Every generator returns an :py:class:`.Instance`; ``Instance.document()``
serializes it with a leading ``# family=... key=value`` comment.

"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy

from epframe.graph import EPFrameError, Graph, TerminalSet, breadth_first, serialize_graph
from epframe.labeling import EdgeLabeling, GroupSpec, PathSpec
from epframe.oracle import Budget, OracleBudgetExceeded, enumerate_paths

_logger = logging.getLogger("epframe.gallery")

VERIFY_MAX_SIDE = 3
VERIFY_BUDGET = Budget(max_vertices=None, max_nodes=2 * 10 ** 6)


class FamilyParameterError(EPFrameError):
    """Family parameters outside their admissible range."""


class CalibrationError(EPFrameError):
    """A construction failed its own verification."""


# ================================Instances====================================
@dataclass
class Instance:
    graph: Graph
    A: TerminalSet
    B: Optional[TerminalSet] = None
    labeling: Optional[EdgeLabeling] = None
    family: str = ""
    params: Dict = field(default_factory=dict)
    marks: Dict = field(default_factory=dict)
    header: List[str] = field(default_factory=list)

    def document(self):
        head = " ".join(["family={}".format(self.family)]
                        + ["{}={}".format(key, value) for key, value in self.params.items()])
        return serialize_graph(self.graph, self.A, self.B, self.labeling, [head] + self.header)


class GraphBuilder(object):
    """Incremental construction; ids follow creation order."""

    def __init__(self):
        self.names: List[str] = []
        self.index: Dict[str, int] = {}
        self.pairs = []
        self.labels = []
        self.in_a, self.in_b = set(), set()

    def vertex(self, name, A=False, B=False):
        if name in self.index:
            raise FamilyParameterError("duplicate vertex {!r}".format(name))
        self.index[name] = len(self.names)
        self.names.append(name)
        if A:
            self.in_a.add(self.index[name])
        if B:
            self.in_b.add(self.index[name])
        return self.index[name]

    def edge(self, u, v, label=None):
        self.pairs.append((u, v))
        self.labels.append(label)
        return len(self.pairs) - 1

    def path(self, u, v, length, prefix):
        """Unit edges u -> prefix.1 -> ... -> v; returns their ids in order."""
        if length < 1:
            raise FamilyParameterError("path length must be >= 1")
        chain = [u] + [self.vertex("{}.{}".format(prefix, i)) for i in range(1, length)] + [v]
        return [self.edge(a, b) for a, b in zip(chain, chain[1:])]

    def build(self, directed=False, with_b=False):
        g = Graph(self.names, self.pairs, directed=directed)
        A = TerminalSet(tuple(self.in_a), "A")
        B = TerminalSet(tuple(self.in_b), "B") if with_b else None
        return g, A, B

    def labeling(self, g, group, mode):
        weights = {eid: (group.zero() if x is None else x) for eid, x in enumerate(self.labels)}
        return EdgeLabeling.for_graph(g, group, mode, weights)
# =============================================================================


# ===========================Complete graph families===========================
def gen_clique_a(k: int) -> Instance:
    if k < 1:
        raise FamilyParameterError("clique-a needs k >= 1")
    gb = GraphBuilder()
    vs = [gb.vertex("v{}".format(i), A=True) for i in range(1, 2 * k)]
    for i, u in enumerate(vs):
        for v in vs[i + 1:]:
            gb.edge(u, v)
    g, A, _ = gb.build()
    return Instance(g, A, family="clique-a", params={"k": k})


def gen_long_lb(k: int, ell: int) -> Instance:
    if k < 2 or ell < 3:
        raise FamilyParameterError("long-lb needs k >= 2 and ell >= 3")
    gb = GraphBuilder()
    size = 2 * ell - 3
    for i in range(1, k):
        core = [gb.vertex("c{}_{}".format(i, j)) for j in range(1, size + 1)]
        for x, u in enumerate(core):
            for v in core[x + 1:]:
                gb.edge(u, v)
        for j, u in enumerate(core, 1):
            gb.edge(u, gb.vertex("a{}_{}".format(i, j), A=True))
    g, A, _ = gb.build()
    return Instance(g, A, family="long-lb", params={"k": k, "ell": ell})
# =============================================================================


# ===============================Modular grids=================================
def _smallest_prime_divisor(m):
    q = 2
    while q * q <= m:
        if m % q == 0:
            return q
        q += 1
    return m


@dataclass(frozen=True)
class ModularFamilyParams:
    m: int
    d: int
    s: int

    def __post_init__(self):
        if self.m <= 4 or _smallest_prime_divisor(self.m) == self.m:
            raise FamilyParameterError("m must be composite, m > 4 (got {})".format(self.m))
        if not 0 <= self.d < self.m:
            raise FamilyParameterError("d must satisfy 0 <= d < m (got {})".format(self.d))
        if self.s < 2:
            raise FamilyParameterError("s must be >= 2 (got {})".format(self.s))

    @property
    def p(self):
        return _smallest_prime_divisor(self.m)

    @property
    def b(self):
        return self.m // self.p

    @property
    def c(self):
        return self.m - self.m // self.p - 1

    def attachment_lengths(self):
        """(left, right, rule) after adjusting the A-incident edges for residue d."""
        m, d, c = self.m, self.d, self.c
        for x in range(m):
            if (2 * x) % m == d:
                return x + 1, c + x, "halved x={}".format(x)
        if d != (m // 2 - 2) % m:
            return d + 1, c, "left"
        return 1, c + d, "right"


def _grid(gb, s, top_length, other_length, prefix="t"):
    """s x s grid t<i>_<j> (column i, row j, row s on top); returns (nodes, top edge ids)."""
    node = {}
    for i in range(1, s + 1):
        for j in range(1, s + 1):
            node[i, j] = gb.vertex("{}{}_{}".format(prefix, i, j))
    top = []
    for j in range(1, s + 1):
        for i in range(1, s):
            length = top_length if j == s else other_length
            eids = gb.path(node[i, j], node[i + 1, j], length, "h{}_{}".format(i, j))
            if j == s:
                top.extend(eids)
    for i in range(1, s + 1):
        for j in range(1, s):
            gb.path(node[i, j], node[i, j + 1], other_length, "v{}_{}".format(i, j))
    return node, top


def gen_grid_mod(params: ModularFamilyParams) -> Instance:
    """
    Top segments have length b, other segments length m. Left terminals are
    attached by one edge and right terminals by a path of length c, before
    the A-incident edges are stretched for residue d.
    """
    s = params.s
    left_len, right_len, rule = params.attachment_lengths()
    gb = GraphBuilder()
    node, top = _grid(gb, s, params.b, params.m)
    left, right = [], []
    for j in range(1, s + 1):
        la = gb.vertex("la{}".format(j), A=True)
        gb.path(la, node[1, j], left_len, "la{}".format(j))
        left.append(la)
    for j in range(1, s + 1):
        ra = gb.vertex("ra{}".format(j), A=True)
        gb.path(node[s, j], ra, right_len, "ra{}".format(j))
        right.append(ra)
    g, A, _ = gb.build()
    marks = {"left": tuple(left), "right": tuple(right), "top": tuple(top),
             "segment": params.b, "rule": rule}
    _logger.info("grid-mod m=%d d=%d s=%d: left=%d right=%d (%s)",
                 params.m, params.d, s, left_len, right_len, rule)
    return Instance(g, A, family="grid-mod", params={"m": params.m, "d": params.d, "s": s},
                    marks=marks)


def classify_grid_path(instance: Instance, p):
    """('same-side' | 'crossing', number of top segments used) for an A-path of a grid family."""
    left, right = set(instance.marks["left"]), set(instance.marks["right"])
    ends = {p.first, p.last}
    crossing = bool(ends & left) and bool(ends & right)
    used = len(set(p.edges) & set(instance.marks["top"])) // instance.marks["segment"]
    return ("crossing" if crossing else "same-side"), used
# =============================================================================


# ==================================Walls======================================
def _wall(gb, r, prefix="w"):
    """
    Elementary wall with r x r bricks: rows 0..r, columns 0..2r+1, vertical
    edge (i,j)-(i+1,j) iff j = i mod 2, degree-1 corners removed. Returns
    (node map, row lists ordered by column).
    """
    cols = 2 * r + 2
    horizontal = [((i, j), (i, j + 1)) for i in range(r + 1) for j in range(cols - 1)]
    vertical = [((i, j), (i + 1, j)) for i in range(r) for j in range(cols) if j % 2 == i % 2]
    degree = {}
    for a, b in horizontal + vertical:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    dropped = {v for v, deg in degree.items() if deg == 1}
    node = {}
    for i in range(r + 1):
        for j in range(cols):
            if (i, j) not in dropped:
                node[i, j] = gb.vertex("{}{}_{}".format(prefix, i, j))
    edges = {}
    for a, b in horizontal + vertical:
        if a in node and b in node:
            edges[a, b] = gb.edge(node[a], node[b])
    rows = [sorted(j for (i, j) in node if i == row) for row in range(r + 1)]
    return node, rows, edges


def gen_wall_aba(r: int) -> Instance:
    if r < 2:
        raise FamilyParameterError("wall-aba needs r >= 2")
    gb = GraphBuilder()
    node, rows, _ = _wall(gb, r)
    a1 = gb.vertex("a1", A=True)
    a2 = gb.vertex("a2", A=True)
    for i in range(r + 1):
        gb.edge(a1, node[i, rows[i][0]])
    for i in range(r + 1):
        gb.edge(node[i, rows[i][-1]], a2)
    for j in rows[r]:
        gb.in_b.add(node[r, j])
    g, A, B = gb.build(with_b=True)
    return Instance(g, A, B, family="wall-aba", params={"r": r},
                    marks={"top": tuple(node[r, j] for j in rows[r])})


def _grey_pairs(top_columns):
    """Top-row column pairs (1,3), (5,7), ... that both exist."""
    present = set(top_columns)
    return [(j, j + 2) for j in range(1, max(present) - 1, 4) if j in present and j + 2 in present]


def _parity_skeleton(gb, r, subdivide, target):
    """Wall, terminals and grey edges shared by the parity and zero-label walls."""
    node, rows, _ = _wall(gb, r)
    a1 = gb.vertex("a1", A=True)
    a2 = gb.vertex("a2", A=True)
    a1_edges = []
    for i in range(r + 1):
        v = (i, rows[i][0])
        length = 1 if not subdivide or sum(v) % 2 == 0 else 2
        a1_edges.append(gb.path(a1, node[v], length, "l{}".format(i))[0])
    for i in range(r + 1):
        v = (i, rows[i][-1])
        if not subdivide:
            length = 1
        elif target == "odd":
            length = 1 if sum(v) % 2 == 0 else 2
        else:
            length = 1 if sum(v) % 2 == 1 else 2
        gb.path(node[v], a2, length, "r{}".format(i))
    grey = []
    for j1, j2 in _grey_pairs(rows[r]):
        grey.append(gb.edge(node[r, j1], node[r, j2]))
    return node, rows, a1_edges, grey


def _colouring_ok(g, A, grey, target):
    """Exact check: without grey edges the graph is bipartite and A-paths get the other parity."""
    pairs = [(e.u, e.v) for e in g.edges if e.id not in set(grey)]
    order, parent = breadth_first(list(g.vertices), pairs, A.members[0])
    side = {}
    for v in order:
        side[v] = 0 if parent[v] is None else side[parent[v]] ^ 1
    for u, v in pairs:
        if u in side and v in side and side[u] == side[v]:
            return False
    a1, a2 = A.members
    if a2 not in side:
        return True
    crossing_parity = "odd" if side[a1] != side[a2] else "even"
    return crossing_parity != target


def gen_wall_parity(r: int, parity: str = "odd") -> Instance:
    """
    Wall whose A-paths avoiding the grey top-row chords all have the
    non-target parity; every grey chord flips it. B is the set of grey
    endpoints. Verified by enumeration up to side 3, by 2-colouring beyond.
    """
    if r < 2:
        raise FamilyParameterError("wall-parity needs r >= 2")
    if parity not in ("even", "odd"):
        raise FamilyParameterError("parity must be even or odd")
    gb = GraphBuilder()
    node, rows, _, grey = _parity_skeleton(gb, r, subdivide=True, target=parity)
    for eid in grey:
        u, v = gb.pairs[eid]
        gb.in_b.update((u, v))
    g, A, B = gb.build(with_b=True)
    method = _verify_parity(g, A, B, grey, parity, r)
    return Instance(g, A, B, family="wall-parity", params={"r": r, "parity": parity},
                    marks={"grey": tuple(grey)}, header=["verified={}".format(method)])


def _verify_parity(g, A, B, grey, parity, side):
    if not _colouring_ok(g, A, grey, parity):
        raise CalibrationError("grey-free A-paths do not all have the non-target parity")
    if side > VERIFY_MAX_SIDE:
        return "colouring"
    try:
        targets = enumerate_paths(g, A, B, None, PathSpec(parity), VERIFY_BUDGET)
    except OracleBudgetExceeded:
        _logger.warning("parity wall side %d: enumeration over budget, colouring proof only", side)
        return "colouring"
    if not targets:
        raise CalibrationError("no {} A-path exists".format(parity))
    greyset = set(grey)
    wrong = [p for p in targets if not set(p.edges) & greyset]
    if wrong:
        raise CalibrationError("{} {} A-paths avoid every grey edge".format(len(wrong), parity))
    return "enumeration"


def gen_zero_label_wall(r: int, group: GroupSpec, mu, mode: str = "undirected") -> Instance:
    """
    a1-edges weigh mu, grey chords -mu, everything else zero. With a
    directed labeling, edges point left to right and top to bottom.
    """
    if r < 2:
        raise FamilyParameterError("zero-wall needs r >= 2")
    if group.is_zero(mu):
        raise FamilyParameterError("mu must be a non-zero group element")
    gb = GraphBuilder()
    node, rows, a1_edges, grey = _parity_skeleton(gb, r, subdivide=False, target="odd")
    if mode == "directed":
        coord = {vid: ij for ij, vid in node.items()}
        for eid, (u, v) in enumerate(gb.pairs):
            if u in coord and v in coord:
                (iu, ju), (iv, jv) = coord[u], coord[v]
                if iu < iv or (iu == iv and ju > jv):
                    gb.pairs[eid] = (v, u)
    for eid in a1_edges:
        gb.labels[eid] = mu
    for eid in grey:
        gb.labels[eid] = group.neg(mu)
    g, A, _ = gb.build()
    lab = gb.labeling(g, group, mode)
    return Instance(g, A, None, lab, family="zero-wall",
                    params={"r": r, "group": group.option(), "mode": mode,
                            "mu": group.format_element(mu)},
                    marks={"grey": tuple(grey), "a1": tuple(a1_edges)})
# =============================================================================


# ===============================Directed grid=================================
def gen_directed_grid(s: int) -> Instance:
    """Horizontal arcs point right; odd columns point up, even columns down."""
    if s < 2:
        raise FamilyParameterError("directed-grid needs s >= 2")
    gb = GraphBuilder()
    node = {}
    for i in range(1, s + 1):
        for j in range(1, s + 1):
            node[i, j] = gb.vertex("t{}_{}".format(i, j), B=(j == s))
    for j in range(1, s + 1):
        for i in range(1, s):
            gb.edge(node[i, j], node[i + 1, j])
    for i in range(1, s + 1):
        for j in range(1, s):
            if i % 2:
                gb.edge(node[i, j], node[i, j + 1])
            else:
                gb.edge(node[i, j + 1], node[i, j])
    for j in range(1, s + 1):
        gb.edge(gb.vertex("la{}".format(j), A=True), node[1, j])
    for j in range(1, s + 1):
        gb.edge(node[s, j], gb.vertex("ra{}".format(j), A=True))
    g, A, B = gb.build(directed=True, with_b=True)
    return Instance(g, A, B, family="directed-grid", params={"s": s})
# =============================================================================


# ==========================Even A-B-path counterexample=======================
def gen_even_abpath_counterexample(s: int, parity: str = "even") -> Instance:
    """
    Grid with top segments of length 3 and other segments of length 6; left
    terminals in A on single edges, right terminals in B on paths of length
    2 (target even) or 1 (target odd), so crossings avoiding the top row get
    the other parity.
    """
    if s < 2:
        raise FamilyParameterError("even-ab needs s >= 2")
    if parity not in ("even", "odd"):
        raise FamilyParameterError("parity must be even or odd")
    gb = GraphBuilder()
    node, top = _grid(gb, s, 3, 6)
    left, right = [], []
    for j in range(1, s + 1):
        la = gb.vertex("la{}".format(j), A=True)
        gb.path(la, node[1, j], 1, "la{}".format(j))
        left.append(la)
    right_len = 2 if parity == "even" else 1
    for j in range(1, s + 1):
        rb = gb.vertex("rb{}".format(j), B=True)
        gb.path(node[s, j], rb, right_len, "rb{}".format(j))
        right.append(rb)
    g, A, B = gb.build(with_b=True)
    instance = Instance(g, A, B, family="even-ab", params={"s": s, "parity": parity},
                        marks={"left": tuple(left), "right": tuple(right), "top": tuple(top),
                               "segment": 3})
    if s <= VERIFY_MAX_SIDE:
        targets = enumerate_paths(g, A, B, None, PathSpec("ab-" + parity), VERIFY_BUDGET)
        if not targets:
            raise CalibrationError("no {} A-B-path exists".format(parity))
        topset = set(top)
        wrong = [p for p in targets if not set(p.edges) & topset]
        if wrong:
            raise CalibrationError("{} A-B-paths of the target parity avoid the top row".format(len(wrong)))
        instance.header.append("verified=enumeration")
    else:
        instance.header.append("verified=no")
    return instance
# =============================================================================


# =================================Random======================================
def gen_random(n: int, p: float = 0.3, a_fraction: float = 0.4, seed: int = 0) -> Instance:
    if n < 0 or not 0 <= p <= 1 or not 0 <= a_fraction <= 1:
        raise FamilyParameterError("random needs n >= 0 and probabilities in [0, 1]")
    rng = numpy.random.default_rng(seed)
    gb = GraphBuilder()
    vs = [gb.vertex("v{}".format(i)) for i in range(n)]
    draws = rng.random(n * (n - 1) // 2)
    x = 0
    for i in range(n):
        for j in range(i + 1, n):
            if draws[x] < p:
                gb.edge(vs[i], vs[j])
            x += 1
    gb.in_a.update(v for v, r in zip(vs, rng.random(n)) if r < a_fraction)
    g, A, _ = gb.build()
    return Instance(g, A, family="random", params={"n": n, "p": p, "a": a_fraction, "seed": seed})
# =============================================================================


FAMILIES = {
    "clique-a": gen_clique_a,
    "long-lb": gen_long_lb,
    "grid-mod": gen_grid_mod,
    "wall-aba": gen_wall_aba,
    "wall-parity": gen_wall_parity,
    "zero-wall": gen_zero_label_wall,
    "directed-grid": gen_directed_grid,
    "even-ab": gen_even_abpath_counterexample,
    "random": gen_random,
}
