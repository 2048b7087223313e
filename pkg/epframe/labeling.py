# =============================================================================
# ~/epframe/epframe/labeling.py
#
# created  18 October 2026
# modified
#
# This py-file contains abelian group edge labelings, path weights and the
# PathSpec predicate that says which A-paths count as targets.
#
# note: Parity is the Z_2 labeling with every edge weighted 1; an even path
#       is then exactly a zero path.
#
# =============================================================================
"""
Group labelings and target path kinds
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

+------------------------------------+-----------------------------------------+
|      Name                          |        Purpose                          |
+====================================+=========================================+
|:py:class:`.GroupSpec`              |Z_m, Z or Z_2^w element arithmetic       |
+------------------------------------+-----------------------------------------+
|:py:class:`.EdgeLabeling`           |edge weights plus reference orientation  |
+------------------------------------+-----------------------------------------+
|:py:func:`.path_weight`             |sum of (signed) edge labels along a path |
+------------------------------------+-----------------------------------------+
|:py:func:`.make_parity_labeling`    |all-ones Z_2 labeling                    |
+------------------------------------+-----------------------------------------+
|:py:class:`.PathSpec`               |target kind plus disjointness mode       |
+------------------------------------+-----------------------------------------+
|:py:func:`.matches_spec`            |does a path belong to the target kind    |
+------------------------------------+-----------------------------------------+

"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy

from epframe.graph import EPFrameError, Graph, Path, TerminalSet

_logger = logging.getLogger("epframe.labeling")

INT_BOUND = 2 ** 63 - 1


class LabelingError(EPFrameError):
    """Bad group declaration, bad element or missing edge weight."""


class LabelOverflowError(LabelingError):
    """A Z sum left the machine integer range."""


class SpecError(EPFrameError):
    """A path kind is malformed or needs data that was not supplied."""


# ==================================Groups=====================================
@dataclass(frozen=True)
class GroupSpec:
    """``kind`` is ``Zm`` (``param`` = modulus), ``Z`` or ``Z2w`` (``param`` = dimension)."""
    kind: str
    param: Optional[int] = None

    def __post_init__(self):
        if self.kind == "Zm":
            if self.param is None or self.param < 2:
                raise LabelingError("Zm needs a modulus >= 2")
        elif self.kind == "Z2w":
            if self.param is None or self.param < 1:
                raise LabelingError("Z2w needs a dimension >= 1")
        elif self.kind == "Z":
            if self.param is not None:
                raise LabelingError("Z takes no parameter")
        else:
            raise LabelingError("unknown group {!r}".format(self.kind))

    @classmethod
    def from_declaration(cls, tokens):
        """Tokens following ``group``; returns ``(GroupSpec, mode)``."""
        tokens = list(tokens)
        mode = "undirected"
        if tokens and tokens[-1] == "directed":
            mode = "directed"
            tokens.pop()
        if not tokens:
            raise LabelingError("group declaration needs a kind")
        kind, rest = tokens[0], tokens[1:]
        if kind == "Z":
            if rest:
                raise LabelingError("Z takes no parameter")
            return cls("Z"), mode
        if kind in ("Zm", "Z2w"):
            if len(rest) != 1:
                raise LabelingError("{} takes exactly one parameter".format(kind))
            try:
                param = int(rest[0])
            except ValueError:
                raise LabelingError("bad group parameter {!r}".format(rest[0]))
            return cls(kind, param), mode
        raise LabelingError("unknown group {!r}".format(kind))

    @classmethod
    def from_option(cls, text):
        """Command-line form: ``Zm:<m>``, ``Z`` or ``Z2w:<w>``."""
        return cls.from_declaration(text.split(":"))[0]

    def option(self):
        return self.kind if self.param is None else "{}:{}".format(self.kind, self.param)

    def declaration(self, mode="undirected"):
        parts = ["group", self.kind]
        if self.param is not None:
            parts.append(str(self.param))
        if mode == "directed":
            parts.append("directed")
        return " ".join(parts)

    def zero(self):
        if self.kind == "Z2w":
            return numpy.zeros(self.param, dtype=numpy.uint8)
        return 0

    def add(self, x, y):
        if self.kind == "Zm":
            return (x + y) % self.param
        if self.kind == "Z2w":
            return numpy.bitwise_xor(x, y)
        total = x + y
        if abs(total) > INT_BOUND:
            raise LabelOverflowError("Z label sum {} leaves the 64-bit range".format(total))
        return total

    def neg(self, x):
        if self.kind == "Zm":
            return (-x) % self.param
        if self.kind == "Z2w":
            return x.copy()
        return -x

    def is_zero(self, x):
        if self.kind == "Z2w":
            return not numpy.any(x)
        return x == 0

    def equal(self, x, y):
        return self.is_zero(self.add(x, self.neg(y)))

    def parse_element(self, text):
        if self.kind == "Z2w":
            bits = text.split(",")
            if len(bits) != self.param or any(b not in ("0", "1") for b in bits):
                raise LabelingError("Z2w element needs {} comma-separated bits, got {!r}"
                                    .format(self.param, text))
            return numpy.array([int(b) for b in bits], dtype=numpy.uint8)
        try:
            value = int(text)
        except ValueError:
            raise LabelingError("bad group element {!r}".format(text))
        if self.kind == "Zm":
            return value % self.param
        if abs(value) > INT_BOUND:
            raise LabelOverflowError("Z label {} leaves the 64-bit range".format(value))
        return value

    def format_element(self, x):
        if self.kind == "Z2w":
            return ",".join(str(int(b)) for b in x)
        return str(int(x))
# =============================================================================


# ================================Labelings====================================
@dataclass(eq=False)
class EdgeLabeling:
    """
    Weights per edge id. ``tails`` records each edge's reference orientation
    (the tail vertex); in ``directed`` mode traversal from the head side
    counts the negated weight.
    """
    group: GroupSpec
    mode: str
    weights: Dict[int, object]
    tails: Dict[int, int]

    def __post_init__(self):
        if self.mode not in ("undirected", "directed"):
            raise LabelingError("labeling mode must be undirected or directed")

    @classmethod
    def for_graph(cls, g: Graph, group: GroupSpec, mode="undirected", weights=None):
        weights = dict(weights or {})
        missing = [e.id for e in g.edges if e.id not in weights]
        if missing:
            raise LabelingError("edge {} has no weight".format(missing[0]))
        return cls(group, mode, weights, {e.id: e.u for e in g.edges})

    def weight(self, eid):
        try:
            return self.weights[eid]
        except KeyError:
            raise LabelingError("edge {} has no weight".format(eid))


def path_weight(lab: EdgeLabeling, p: Path):
    total = lab.group.zero()
    for i, eid in enumerate(p.edges):
        w = lab.weight(eid)
        if lab.mode == "directed":
            if eid not in lab.tails:
                raise LabelingError("edge {} has no reference orientation".format(eid))
            if p.vertices[i] != lab.tails[eid]:
                w = lab.group.neg(w)
        total = lab.group.add(total, w)
    return total


def make_parity_labeling(g: Graph) -> EdgeLabeling:
    return EdgeLabeling.for_graph(g, GroupSpec("Zm", 2), "undirected",
                                  {e.id: 1 for e in g.edges})
# =============================================================================


# ================================Path kinds===================================
KINDS = ("plain", "long", "even", "odd", "zero", "nonzero", "aba",
         "directed-plain", "directed-aba", "zero-mod", "ab", "ab-even", "ab-odd")
LABELED_KINDS = ("zero", "nonzero")
B_KINDS = ("aba", "directed-aba", "ab", "ab-even", "ab-odd")
DIRECTED_KINDS = ("directed-plain", "directed-aba")
AB_KINDS = ("ab", "ab-even", "ab-odd")


@dataclass(frozen=True)
class PathSpec:
    """
    Target path kind.

    ``ell`` is present iff ``kind == "long"``; ``m`` and ``d`` iff
    ``kind == "zero-mod"`` (length congruent to ``d`` modulo ``m``).
    ``disjointness`` is ``vertex`` or ``edge``.
    """
    kind: str
    ell: Optional[int] = None
    m: Optional[int] = None
    d: Optional[int] = None
    disjointness: str = "vertex"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecError("unknown path kind {!r}".format(self.kind))
        if self.disjointness not in ("vertex", "edge"):
            raise SpecError("disjointness must be vertex or edge")
        if (self.kind == "long") != (self.ell is not None):
            raise SpecError("ell is required exactly for long paths")
        if self.ell is not None and self.ell < 1:
            raise SpecError("ell must be >= 1")
        if (self.kind == "zero-mod") != (self.m is not None and self.d is not None):
            raise SpecError("m and d are required exactly for zero-mod paths")
        if self.m is not None and (self.m < 1 or not 0 <= self.d < self.m):
            raise SpecError("zero-mod needs m >= 1 and 0 <= d < m")

    @classmethod
    def parse(cls, text, disjointness="vertex"):
        """``plain``, ``long:<ell>``, ``zero-mod:<m>:<d>`` and so on."""
        parts = text.strip().split(":")
        kind, args = parts[0], parts[1:]
        try:
            numbers = [int(a) for a in args]
        except ValueError:
            raise SpecError("bad path kind parameters in {!r}".format(text))
        if kind == "long":
            if len(numbers) != 1:
                raise SpecError("long needs one parameter: long:<ell>")
            return cls("long", ell=numbers[0], disjointness=disjointness)
        if kind == "zero-mod":
            if len(numbers) != 2:
                raise SpecError("zero-mod needs two parameters: zero-mod:<m>:<d>")
            return cls("zero-mod", m=numbers[0], d=numbers[1], disjointness=disjointness)
        if numbers:
            raise SpecError("{} takes no parameters".format(kind))
        return cls(kind, disjointness=disjointness)

    def __str__(self):
        if self.kind == "long":
            return "long:{}".format(self.ell)
        if self.kind == "zero-mod":
            return "zero-mod:{}:{}".format(self.m, self.d)
        return self.kind

    @property
    def oriented(self):
        return self.kind in DIRECTED_KINDS

    @property
    def needs_labeling(self):
        return self.kind in LABELED_KINDS

    @property
    def needs_b(self):
        return self.kind in B_KINDS

    @property
    def is_ab(self):
        return self.kind in AB_KINDS

    def check_inputs(self, g: Graph, B: Optional[TerminalSet], lab: Optional[EdgeLabeling]):
        if self.needs_labeling and lab is None:
            raise SpecError("path kind {} needs an edge labeling".format(self))
        if self.needs_b and B is None:
            raise SpecError("path kind {} needs a vertex set B".format(self))
        if self.oriented and not g.directed:
            raise SpecError("path kind {} needs a directed graph".format(self))


def spec_violations(spec: PathSpec, g: Graph, A: TerminalSet, B: Optional[TerminalSet],
                    lab: Optional[EdgeLabeling], p: Path) -> List[str]:
    """Clauses of ``spec`` that the (already valid) path ``p`` breaks."""
    spec.check_inputs(g, B, lab)
    out = []
    if p.length < 1:
        return ["path has length 0"]
    ends = (p.first, p.last)
    if spec.is_ab:
        forward = p.first in A and p.last in B
        backward = p.first in B and p.last in A
        if not (forward or backward):
            if not any(v in A for v in ends):
                out.append("endpoint not in A")
            else:
                out.append("endpoint not in B")
        if any(v in A or v in B for v in p.interior):
            out.append("interior vertex in A or B")
    else:
        if any(v not in A for v in ends):
            out.append("endpoint not in A")
        if any(v in A for v in p.interior):
            out.append("interior vertex in A")
    kind = spec.kind
    if kind == "long" and p.length < spec.ell:
        out.append("path shorter than {}".format(spec.ell))
    elif kind in ("even", "ab-even") and p.length % 2:
        out.append("path length is odd")
    elif kind in ("odd", "ab-odd") and not p.length % 2:
        out.append("path length is even")
    elif kind == "zero-mod" and p.length % spec.m != spec.d:
        out.append("path length not congruent to {} mod {}".format(spec.d, spec.m))
    elif kind in ("zero", "nonzero"):
        zero = lab.group.is_zero(path_weight(lab, p))
        if kind == "zero" and not zero:
            out.append("path weight is non-zero")
        if kind == "nonzero" and zero:
            out.append("path weight is zero")
    if kind in ("aba", "directed-aba") and not any(v in B for v in p.vertices):
        out.append("path avoids B")
    if spec.oriented:
        for i, eid in enumerate(p.edges):
            e = g.edge(eid)
            if (e.u, e.v) != (p.vertices[i], p.vertices[i + 1]):
                out.append("edge {} traversed against its orientation".format(eid))
                break
    return out


def matches_spec(spec: PathSpec, g: Graph, A: TerminalSet, B: Optional[TerminalSet],
                 lab: Optional[EdgeLabeling], p: Path) -> bool:
    return not spec_violations(spec, g, A, B, lab, p)
# =============================================================================
