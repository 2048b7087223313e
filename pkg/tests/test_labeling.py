import numpy
import pytest

from epframe.graph import Graph, Path, TerminalSet
from epframe.labeling import (INT_BOUND, EdgeLabeling, GroupSpec, LabelingError, LabelOverflowError,
                              PathSpec, SpecError, make_parity_labeling, matches_spec, path_weight,
                              spec_violations)


def test_cyclic_group_arithmetic():
    z6 = GroupSpec("Zm", 6)
    assert z6.add(4, 5) == 3
    assert z6.neg(2) == 4
    assert z6.parse_element("-1") == 5
    assert z6.equal(7 % 6, 1)


def test_integer_overflow_is_reported():
    z = GroupSpec("Z")
    assert z.add(-3, 5) == 2
    with pytest.raises(LabelOverflowError):
        z.add(INT_BOUND, 1)
    with pytest.raises(LabelOverflowError):
        z.parse_element(str(INT_BOUND + 1))


def test_bit_vector_group():
    z2w = GroupSpec("Z2w", 3)
    x = z2w.parse_element("1,0,1")
    assert z2w.is_zero(z2w.add(x, x))
    assert z2w.format_element(z2w.add(x, z2w.parse_element("0,1,1"))) == "1,1,0"
    with pytest.raises(LabelingError):
        z2w.parse_element("1,0")


def test_group_declarations():
    assert GroupSpec.from_declaration(["Zm", "4", "directed"]) == (GroupSpec("Zm", 4), "directed")
    assert GroupSpec.from_option("Z2w:2") == GroupSpec("Z2w", 2)
    assert GroupSpec("Zm", 4).declaration("directed") == "group Zm 4 directed"
    assert GroupSpec("Z").option() == "Z"
    for bad in (["Q"], ["Z", "3"], ["Zm"], []):
        with pytest.raises(LabelingError):
            GroupSpec.from_declaration(bad)


def test_directed_labeling_negates_backward_edges():
    g = Graph(["a", "x", "b"], [(0, 1), (2, 1)])
    lab = EdgeLabeling.for_graph(g, GroupSpec("Z"), "directed", {0: 2, 1: 2})
    assert path_weight(lab, Path((0, 1, 2), (0, 1))) == 0
    undirected = EdgeLabeling.for_graph(g, GroupSpec("Z"), "undirected", {0: 2, 1: 2})
    assert path_weight(undirected, Path((0, 1, 2), (0, 1))) == 4


def test_labeling_needs_every_edge():
    g = Graph(["a", "b"], [(0, 1)])
    with pytest.raises(LabelingError):
        EdgeLabeling.for_graph(g, GroupSpec("Z"), "undirected", {})


def test_parity_labeling_counts_length():
    g = Graph(["a", "x", "y", "b"], [(0, 1), (1, 2), (2, 3)])
    lab = make_parity_labeling(g)
    assert path_weight(lab, Path((0, 1, 2, 3), (0, 1, 2))) == 1


@pytest.mark.parametrize("text, expected", [
    ("plain", PathSpec("plain")),
    ("long:4", PathSpec("long", ell=4)),
    ("zero-mod:6:0", PathSpec("zero-mod", m=6, d=0)),
    ("ab-even", PathSpec("ab-even")),
])
def test_path_spec_parse(text, expected):
    assert PathSpec.parse(text) == expected
    assert str(expected) == text


@pytest.mark.parametrize("text", ["long", "long:0", "zero-mod:6", "zero-mod:6:6", "even:2", "wide"])
def test_path_spec_rejects(text):
    with pytest.raises(SpecError):
        PathSpec.parse(text)


def test_spec_violations_name_each_clause():
    # a - x - c - b with c in A
    g = Graph(["a", "x", "c", "b"], [(0, 1), (1, 2), (2, 3)])
    A = TerminalSet((0, 2, 3))
    through = Path((0, 1, 2, 3), (0, 1, 2))
    assert spec_violations(PathSpec("plain"), g, A, None, None, through) == ["interior vertex in A"]
    short = Path((0, 1, 2), (0, 1))
    assert spec_violations(PathSpec("long", ell=3), g, A, None, None, short) == ["path shorter than 3"]
    assert matches_spec(PathSpec("even"), g, A, None, None, short)
    assert not matches_spec(PathSpec("odd"), g, A, None, None, short)
    assert spec_violations(PathSpec("plain"), g, A, None, None, Path((0,), ())) == ["path has length 0"]


def test_spec_inputs_are_checked():
    g = Graph(["a", "b"], [(0, 1)])
    A = TerminalSet((0, 1))
    p = Path((0, 1), (0,))
    with pytest.raises(SpecError):
        spec_violations(PathSpec("zero"), g, A, None, None, p)
    with pytest.raises(SpecError):
        spec_violations(PathSpec("aba"), g, A, None, None, p)
    with pytest.raises(SpecError):
        spec_violations(PathSpec("directed-plain"), g, A, None, None, p)


def test_zero_and_ab_kinds():
    g = Graph(["a", "x", "b"], [(0, 1), (1, 2)])
    A, B = TerminalSet((0,)), TerminalSet((2,), "B")
    lab = EdgeLabeling.for_graph(g, GroupSpec("Zm", 3), "undirected", {0: 1, 1: 2})
    p = Path((0, 1, 2), (0, 1))
    assert matches_spec(PathSpec("ab"), g, A, B, None, p)
    assert matches_spec(PathSpec("ab-even"), g, A, B, None, p.reversed())
    assert matches_spec(PathSpec("zero"), g, TerminalSet((0, 2)), None, lab, p)
    assert spec_violations(PathSpec("nonzero"), g, TerminalSet((0, 2)), None, lab, p) == ["path weight is zero"]


def test_z2w_weights_are_numpy_arrays():
    z2w = GroupSpec("Z2w", 2)
    assert isinstance(z2w.zero(), numpy.ndarray)
