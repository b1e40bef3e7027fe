import random
from fractions import Fraction

import pytest

from bsassign import gb
from bsassign.assignmod import assignment_basis, is_assignment
from bsassign.bsgraph import build_graph
from bsassign.morse import (
    flow_down,
    flow_up,
    flowup_generators,
    minimize_ideal,
    morse_generators,
    orient,
    parse_xi,
    report_to_json,
    sign_normalize,
)
from bsassign.polyring import Poly
from bsassign.rootsys import NotPolarizing, RootSystem, evaluate, is_polarizing
from golden import MORSE_212, MORSE_212_IDEALS, MORSE_212_RELATIONS, a1, a2

A2 = RootSystem.parse("A2")
B2 = RootSystem.parse("B2")
G2 = RootSystem.parse("G2")
A3 = RootSystem.parse("A3")
POS = (Fraction(1), Fraction(1))

GRAPHS = [(A2, (2, 1)), (A2, (2, 1, 2)), (A2, (1, 2, 1, 2)), (B2, (1, 2, 1)), (G2, (2, 1, 2)), (A3, (1, 2, 3, 1))]


@pytest.fixture(scope="module")
def report():
    return morse_generators(A2, (2, 1, 2), POS)


def _same_up_to_sign(u, v):
    return u == v or u == [-x for x in v]


def test_parse_xi():
    assert parse_xi("positive", 2) == POS
    assert parse_xi("1/2,3", 2) == (Fraction(1, 2), Fraction(3))
    with pytest.raises(ValueError):
        parse_xi("1", 2)


def test_orientation_of_21():
    og = orient(build_graph(A2, (2, 1)), POS)
    g = og.base
    arrows = {(g.name(v), g.name(w)) for v, w in og.ascending}
    assert arrows == {("00", "01"), ("00", "20"), ("01", "21"), ("20", "21")}
    assert {g.name(v) for v in flow_up(og, g.parse("01"))} == {"01", "21"}
    assert flow_up(og, 0) == frozenset(g.vertices)
    assert flow_up(og, 3) == {3}
    neg = orient(g, (-1, -1))
    assert neg.ascending == {(w, v) for v, w in og.ascending}


def test_single_letter():
    og = orient(build_graph(A2, (1,)), POS)
    assert og.ascending == {(0, 1)}


def test_not_polarizing():
    with pytest.raises(NotPolarizing):
        orient(build_graph(A2, (2, 1)), (1, -1))


def _random_polarizations(g, n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        xi = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(g.rank))
        if is_polarizing(xi, g.edge_labels()):
            out.append(xi)
    return out


@pytest.mark.parametrize("rs, word", GRAPHS)
def test_acyclic_and_dual_under_random_polarizations(rs, word):
    g = build_graph(rs, word)
    for xi in _random_polarizations(g, 50, seed=len(word) * 7 + rs.rank):
        og = orient(g, xi)
        pos = {v: k for k, v in enumerate(og.order)}
        assert all(pos[v] < pos[w] for v, w in og.ascending)
        assert len(og.ascending) == len(g.undirected_edges())
        assert all(evaluate(g.label(v, w), xi) > 0 for v, w in og.ascending)
        dual = orient(g, tuple(-x for x in xi))
        for p in g.vertices:
            assert flow_up(og, p) == flow_down(dual, p)


@pytest.mark.parametrize("rs, word", GRAPHS[:4])
def test_flowup_generators_vanish_off_flow(rs, word):
    basis = assignment_basis(rs, word)
    og = orient(basis.graph, (1,) * rs.rank)
    for p in basis.graph.vertices:
        fg = flowup_generators(basis, og, p)
        for s, eta in zip(fg.syzygies, fg.assignments):
            assert is_assignment(basis.graph, eta.values)
            assert all(not eta.values[v] for v in basis.graph.vertices if v not in fg.flow)
            outside = [v for v in basis.graph.vertices if v not in fg.flow]
            assert all(not sum((c * basis.matrix[v][J] for J, c in enumerate(s)), Poly(rs.rank)) for v in outside)


def test_minimum_vertex_gets_the_basis_columns():
    basis = assignment_basis(A2, (2, 1, 2))
    og = orient(basis.graph, POS)
    fg = flowup_generators(basis, og, 0)
    assert len(fg.syzygies) == 8
    units = {tuple(Poly.const(2, int(J == K)) for J in range(8)) for K in range(8)}
    assert {tuple(s) for s in fg.syzygies} == units


def test_table_212(report):
    g = report.basis.graph
    ours = {m.name(g): list(m.assignment.values) for m in report.raw}
    assert list(ours) == list(MORSE_212)
    for name, row in MORSE_212.items():
        assert _same_up_to_sign(ours[name], row), name


def test_relations_212(report):
    g = report.basis.graph
    for lhs, rhs in MORSE_212_RELATIONS.items():
        total = [Poly(2)] * 8
        for name, c in rhs.items():
            total = [t + c * x for t, x in zip(total, MORSE_212[name])]
        assert total == MORSE_212[lhs]
    assert [m.name(g) for m in report.eliminated] == list(MORSE_212_RELATIONS)
    values = {m.name(g): list(m.assignment.values) for m in report.raw}
    for lhs, cof in report.cofactors.items():
        total = [Poly(2)] * 8
        for name, c in cof.items():
            total = [t + c * x for t, x in zip(total, values[name])]
        assert total == values[lhs]
    kept = [m.name(g) for m in report.kept]
    assert len(kept) == 8 and not set(kept) & set(MORSE_212_RELATIONS)


def test_ideals_212(report):
    g = report.basis.graph
    for v in g.vertices:
        ideal = report.ideals[v]
        expected = MORSE_212_IDEALS[g.name(v)]
        assert sorted(map(str, ideal.minimal)) == sorted(str(sign_normalize(p)) for p in expected)
        assert ideal.principal == (g.name(v) != "002")


def test_span_preserved(report):
    span = gb.groebner([list(m.assignment.values) for m in report.kept])
    for col in report.basis.columns():
        ok, cof = gb.membership(list(col.values), span)
        assert ok
        assert gb.combine(cof, [list(m.assignment.values) for m in report.kept]) == list(col.values)


def test_gkm_word_has_principal_ideals():
    rep = morse_generators(A2, (2, 1), POS)
    assert all(len(rep.per_point[p]) == 1 for p in rep.basis.graph.vertices)
    assert all(i.principal for i in rep.ideals.values())
    assert not rep.eliminated


def test_minimize_ideal():
    assert minimize_ideal([a1 * a2, a2**2, a1 * a2**2]) == [a1 * a2, a2**2]
    assert minimize_ideal([a2, a2 * (a1 + a2)]) == [a2]


def test_report_json_is_deterministic(report):
    again = morse_generators(A2, (2, 1, 2), POS)
    assert report_to_json(report) == report_to_json(again)
