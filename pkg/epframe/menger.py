# =============================================================================
# ~/epframe/epframe/menger.py
#
# created  18 October 2026
# modified
#
# This py-file contains edge-disjoint S-T path packing with a certifying
# minimum edge cut, computed as a unit-capacity maximum flow.
#
# note: scipy's Edmonds-Karp solver does the augmenting; this module builds
#       the capacity matrix, decomposes the flow into paths and reads the cut
#       off the residual graph.
#
# =============================================================================
"""
Menger packing and cut
~~~~~~~~~~~~~~~~~~~~~~

**How to use:**

::

   from epframe.menger import max_edge_disjoint_paths
   pair = max_edge_disjoint_paths(g, S, T, forbidden={3})
   pair.value, pair.paths, pair.cut

Every call asserts ``len(paths) == value == len(cut)``.

"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

import numpy
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from epframe.graph import EPFrameError, Graph, Path

_logger = logging.getLogger("epframe.menger")


class MengerError(EPFrameError):
    """Source and sink sets are empty or overlap."""


class DualityError(EPFrameError):
    """Packing size and cut size disagree."""


@dataclass(frozen=True)
class CutPackPair:
    paths: Tuple[Path, ...]
    cut: Tuple[int, ...]
    value: int


def _capacities(g: Graph, forbidden):
    big = g.m + 1
    source, sink = g.n, g.n + 1
    arcs = []
    for e in g.edges:
        if e.id in forbidden or e.is_loop:
            continue
        arcs.append((e.u, e.v, 1))
        if not g.directed:
            arcs.append((e.v, e.u, 1))
    return arcs, big, source, sink


def max_edge_disjoint_paths(g: Graph, S: Iterable[int], T: Iterable[int],
                            forbidden: Iterable[int] = ()) -> CutPackPair:
    S, T, forbidden = set(S), set(T), set(forbidden)
    if not S or not T:
        raise MengerError("S and T must be nonempty")
    if S & T:
        raise MengerError("S and T overlap in {}".format(sorted(g.name(v) for v in S & T)))
    arcs, big, source, sink = _capacities(g, forbidden)
    arcs += [(source, s, big) for s in sorted(S)]
    arcs += [(t, sink, big) for t in sorted(T)]
    size = g.n + 2
    rows = numpy.array([a[0] for a in arcs], dtype=numpy.int32)
    cols = numpy.array([a[1] for a in arcs], dtype=numpy.int32)
    data = numpy.array([a[2] for a in arcs], dtype=numpy.int32)
    cap = csr_matrix((data, (rows, cols)), shape=(size, size))
    cap.sum_duplicates()
    cap.sort_indices()
    result = maximum_flow(cap, source, sink, method="edmonds_karp")
    value = int(result.flow_value)
    flow = result.flow.tocoo()

    net: Dict[int, Dict[int, int]] = {}
    for u, v, f in zip(flow.row, flow.col, flow.data):
        if f > 0:
            net.setdefault(int(u), {})[int(v)] = int(f)
    paths = _decompose(g, net, forbidden, source, sink, S, T, value)
    cut = _min_cut(g, cap, flow, forbidden, source)
    if not (len(paths) == value == len(cut)):
        raise DualityError("{} paths, flow value {}, cut of size {}".format(len(paths), value, len(cut)))
    _logger.debug("menger |S|=%d |T|=%d forbidden=%d -> %d", len(S), len(T), len(forbidden), value)
    return CutPackPair(tuple(paths), tuple(cut), value)


def _decompose(g, net, forbidden, source, sink, S, T, value) -> List[Path]:
    pools: Dict[tuple, List[int]] = {}
    for e in g.edges:
        if e.id in forbidden or e.is_loop:
            continue
        key = (e.u, e.v) if g.directed else (min(e.u, e.v), max(e.u, e.v))
        pools.setdefault(key, []).append(e.id)

    def take(u, v):
        net[u][v] -= 1
        if not net[u][v]:
            del net[u][v]
        key = (u, v) if g.directed else (min(u, v), max(u, v))
        return pools[key].pop(0)

    paths = []
    for _ in range(value):
        start = min(net[source])
        net[source][start] -= 1
        if not net[source][start]:
            del net[source][start]
        vs, es = [start], []
        where = {start: 0}
        while True:
            v = vs[-1]
            outs = net.get(v, {})
            if sink in outs:
                outs[sink] -= 1
                if not outs[sink]:
                    del outs[sink]
                break
            w = min(outs)
            eid = take(v, w)
            if w in where:
                cut_at = where[w]
                for x in vs[cut_at + 1:]:
                    del where[x]
                del vs[cut_at + 1:]
                del es[cut_at:]
                continue
            where[w] = len(vs)
            vs.append(w)
            es.append(eid)
        j = next(i for i, v in enumerate(vs) if v in T)
        i = max(i for i in range(j + 1) if vs[i] in S)
        paths.append(Path(tuple(vs[i:j + 1]), tuple(es[i:j])))
    return paths


def _min_cut(g, cap, flow, forbidden, source) -> List[int]:
    residual: Dict[int, Dict[int, int]] = {}
    capc = cap.tocoo()
    for u, v, c in zip(capc.row, capc.col, capc.data):
        residual.setdefault(int(u), {})[int(v)] = int(c)
    for u, v, f in zip(flow.row, flow.col, flow.data):
        row = residual.setdefault(int(u), {})
        row[int(v)] = row.get(int(v), 0) - int(f)
    reach = {source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v, r in residual.get(u, {}).items():
            if r > 0 and v not in reach:
                reach.add(v)
                queue.append(v)
    cut = []
    for e in g.edges:
        if e.id in forbidden or e.is_loop:
            continue
        if e.u in reach and e.v not in reach:
            cut.append(e.id)
        elif not g.directed and e.v in reach and e.u not in reach:
            cut.append(e.id)
    return cut
