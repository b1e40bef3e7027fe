import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsassign import gb
from bsassign.oracle import brute_force_syzygies
from bsassign.polyring import Poly
from strategies import polys

x, y = Poly.var(2, 1), Poly.var(2, 2)
ONE, O = Poly.const(2, 1), Poly(2)


def ideal(*ps):
    return gb.groebner([[p] for p in ps])


def test_principal_ideal():
    B = gb.reduced(ideal(x))
    assert B.elements() == [[x]]


def test_two_variables():
    B = ideal(x, y)
    assert gb.reduce([x * y], B) == [O]
    assert gb.reduce([y * x + y], B) == [O]
    assert gb.membership([x + y], B)[0]


def test_membership_examples():
    B = ideal(x * y, y**2)
    ok, cof = gb.membership([y * (x + y)], B)
    assert ok and gb.combine(cof, [[x * y], [y**2]]) == [y * (x + y)]
    assert gb.membership([y**2 * (x + y)], B)[0]
    assert not gb.membership([x], ideal(y))[0]
    ok, cof = gb.membership([x], ideal(x))
    assert ok and cof == [ONE]
    assert not gb.membership([x**2], B)[0]


def test_module_membership():
    gens = [[x, y], [y, O]]
    B = gb.groebner(gens)
    ok, cof = gb.membership([x * y + y, y * y], B)
    assert ok and gb.combine(cof, gens) == [x * y + y, y * y]
    assert not gb.membership([ONE, O], B)[0]


def test_syzygy_examples():
    syz = gb.syzygies([[x], [y]])
    assert len(syz) == 1
    s = syz[0]
    assert s in ([y, -x], [-y, x])
    assert gb.syzygies([[x + y]]) == []
    dup = gb.syzygies([[x, y], [x, y]])
    assert any(v in ([ONE, -ONE], [-ONE, ONE]) for v in dup)


def test_zero_generator_gives_unit_syzygy():
    syz = gb.syzygies([[x], [O]])
    assert [O, ONE] in syz


def test_budget():
    with pytest.raises(gb.BudgetExceeded):
        gb.groebner([[x**2 + y], [x * y + 1], [y**3 + x]], budget=1)


@settings(max_examples=40)
@given(st.lists(polys(2, max_deg=2, max_terms=3), min_size=1, max_size=3))
def test_reduce_is_idempotent_and_cofactors_exact(ps):
    ps = [p for p in ps if p]
    if not ps:
        return
    B = gb.groebner([[p] for p in ps])
    for f in (x * ps[0], y**2 + x, ps[-1] * ps[0] + ps[0]):
        r = gb.reduce([f], B)
        assert gb.reduce(r, B) == r
        ok, cof = gb.membership([f], B)
        if ok:
            assert gb.combine(cof, [[p] for p in ps]) == [f]
    for p in ps:
        assert gb.reduce([p], B) == [O]


def _check_complete(gens, K):
    syz = gb.syzygies(gens)
    n = len(gens)
    for s in syz:
        assert all(c.is_zero() for c in gb.combine(s, gens))
    brute = brute_force_syzygies(gens, K, 2)
    if not brute:
        return
    if not syz:
        pytest.fail("brute force found syzygies the engine missed")
    B = gb.groebner(syz, nvars=2)
    for s in brute:
        assert gb.membership(s, B)[0], f"missing syzygy {s}"
    assert n == len(brute[0])


@pytest.mark.parametrize(
    "gens",
    [
        [[x], [y]],
        [[x], [y], [x + y]],
        [[x * y], [y**2], [x**2]],
        [[x, y], [y, x], [x + y, x + y]],
        [[x, O, y], [O, y, x], [y, x, O]],
        [[x**2, x * y], [x * y, y**2], [x, y]],
    ],
)
def test_syzygies_complete_up_to_degree(gens):
    _check_complete(gens, 3)


@settings(max_examples=15)
@given(st.lists(st.lists(polys(2, max_deg=2, max_terms=2), min_size=2, max_size=2), min_size=2, max_size=3))
def test_random_syzygies_complete(gens):
    _check_complete(gens, 2)
