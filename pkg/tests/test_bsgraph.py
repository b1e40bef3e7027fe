import re
from fractions import Fraction
from itertools import product

import pytest

from bsassign.bsgraph import (
    build_graph,
    export_dot,
    graph_to_json,
    has_collinear_weights,
    is_gkm,
    isotropy_weights,
    parse_subword,
    parse_word,
    subword_label,
)
from bsassign.polyring import weyl_act, Poly
from bsassign.rootsys import NotPolarizing, RootSystem, negate

A2 = RootSystem.parse("A2")
A3 = RootSystem.parse("A3")


def F(*xs):
    return tuple(Fraction(x) for x in xs)


def words(letters, max_len):
    for d in range(max_len + 1):
        yield from product(letters, repeat=d)


SAMPLE = [(A2, w) for w in words([1, 2], 3)] + [(RootSystem.parse("B2"), (1, 2, 1)), (RootSystem.parse("G2"), (2, 1, 2)), (A3, (1, 2, 3, 1))]


def test_word_and_subword_parsing():
    assert parse_word("2,1,2") == (2, 1, 2)
    assert parse_word("") == ()
    assert subword_label((2, 1, 2), 0b101) == "202"
    assert subword_label((), 0) == "[]"
    assert parse_subword((2, 1, 2), "012") == 0b110
    with pytest.raises(ValueError):
        parse_subword((2, 1, 2), "112")


def test_labels_of_small_graphs():
    g = build_graph(A2, (2, 1))
    assert g.label(g.parse("00"), g.parse("20")) == F(0, 1)
    assert g.label(g.parse("01"), g.parse("21")) == F(1, 1)
    g = build_graph(A2, (2, 1, 2))
    assert g.label(g.parse("002"), g.parse("012")) == F(1, 1)


@pytest.mark.parametrize("rs, word", SAMPLE)
def test_all_zero_vertex_sees_simple_roots(rs, word):
    g = build_graph(rs, word)
    assert isotropy_weights(g, 0) == [rs.simple_root(i) for i in word]
    for t in range(g.d):
        assert g.label(0, 1 << t) == rs.simple_root(word[t])


def test_isotropy_examples():
    g = build_graph(A2, (2, 1))
    assert isotropy_weights(g, g.parse("01")) == [F(1, 1), F(-1, 0)]
    g = build_graph(A2, (2, 1, 2))
    assert isotropy_weights(g, 0) == [F(0, 1), F(1, 0), F(0, 1)]


@pytest.mark.parametrize("rs, word", SAMPLE)
def test_structure(rs, word):
    g = build_graph(rs, word)
    d = len(word)
    assert len(g.vertices) == 2**d
    assert len(g.undirected_edges()) == d * 2 ** (d - 1) if d else not g.undirected_edges()
    for v, w, lab in g.edges():
        assert g.label(w, v) == negate(lab)
    for v in g.vertices:
        assert len(g.neighbors(v)) == d
        for t in range(d):
            assert g.label(v, v ^ (1 << t)) == g.isotropy[v][t]


@pytest.mark.parametrize("rs, word", [s for s in SAMPLE if s[1]])
def test_fiber_structure(rs, word):
    g = build_graph(rs, word)
    h = build_graph(rs, word[:-1])
    j = word[-1]
    top = 1 << (len(word) - 1)
    for v, w, lab in h.edges():
        assert g.label(v, w) == lab
        mapped = weyl_act(j, Poly.linear(lab), rs.cartan)
        assert Poly.linear(g.label(v | top, w | top)) == mapped


def test_gkm_examples():
    assert is_gkm(A2, (2, 1))
    assert not is_gkm(A2, (2, 1, 2))
    assert is_gkm(A2, ())


@pytest.mark.parametrize("rs, word", SAMPLE + [(A3, w) for w in words([1, 2, 3], 3)])
def test_gkm_agrees_with_collinearity(rs, word):
    g = build_graph(rs, word)
    assert is_gkm(rs, word) == (not any(has_collinear_weights(g, v) for v in g.vertices))


def test_dot_unoriented():
    dot = export_dot(build_graph(A2, (2, 1)))
    assert dot.startswith("graph BS {")
    assert dot.count("--") == 4
    for lab in ['"00" -- "20" [label="a2"]', '"00" -- "01" [label="a1"]', '"20" -- "21" [label="a1"]', '"01" -- "21" [label="a1 + a2"]']:
        assert lab in dot
    single = export_dot(build_graph(A2, (2,)))
    assert single.count("--") == 1 and 'label="a2"' in single


def test_dot_oriented_and_single_node():
    dot = export_dot(build_graph(A2, (2, 1)), F(1, 1))
    arrows = {line.split("[")[0].strip() for line in dot.splitlines() if "->" in line}
    assert arrows == {'"00" -> "01"', '"00" -> "20"', '"01" -> "21"', '"20" -> "21"'}
    assert export_dot(build_graph(A2, ())).count('"[]"') == 1
    with pytest.raises(NotPolarizing):
        export_dot(build_graph(A2, (2, 1)), F(1, -1))


def test_eight_node_dot():
    dot = export_dot(build_graph(A2, (2, 1, 2)))
    nodes = [line for line in dot.splitlines() if re.fullmatch(r'\s*"\d+";', line)]
    assert len(nodes) == 8 and dot.count("--") == 12


def test_graph_json_shape():
    obj = graph_to_json(build_graph(A2, (2, 1)))
    assert obj["word"] == [2, 1] and obj["vertices"] == [0, 1, 2, 3]
    assert len(obj["edges"]) == 8
