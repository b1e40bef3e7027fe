"""Buchberger's algorithm for submodules of S^k, with cofactors and syzygies.

Module elements are given as sequences of ``Poly``.  Internally a vector is a
dict ``{(exp, pos): Fraction}``.  Terms are ordered term-over-position: the
monomial is compared first (grevlex), ties go to the lower position.

Every basis element remembers its cofactors with respect to the input
generators, so membership answers come with an explicit combination and
syzygies follow from Schreyer's construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polyring import Poly, grevlex_key

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """Too many S-pairs processed."""


def _key(term):
    exp, pos = term
    return (grevlex_key(exp), -pos)


def to_vec(components: Sequence[Poly]) -> dict:
    out = {}
    for pos, p in enumerate(components):
        for exp, c in p.terms.items():
            out[(exp, pos)] = c
    return out


def from_vec(vec: dict, rank: int, nvars: int) -> list:
    parts = [dict() for _ in range(rank)]
    for (exp, pos), c in vec.items():
        parts[pos][exp] = c
    return [Poly(nvars, t) for t in parts]


def unit_vec(pos: int, nvars: int) -> dict:
    return {((0,) * nvars, pos): Fraction(1)}


def lead(vec):
    t = max(vec, key=_key)
    return t, vec[t]


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_div(a, b):
    """a / b if b divides a, else None."""
    out = tuple(x - y for x, y in zip(a, b))
    return out if min(out, default=0) >= 0 else None


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _axpy(acc: dict, c, mono, vec: dict):
    """acc += c * x^mono * vec, in place."""
    for (exp, pos), v in vec.items():
        t = (_mono_mul(exp, mono), pos)
        s = acc.get(t, 0) + c * v
        if s:
            acc[t] = s
        else:
            acc.pop(t, None)
    return acc


def _combine(q: dict, reps: list) -> dict:
    """Sum over (exp, i) in q of q * x^exp * reps[i]."""
    out = {}
    for (exp, i), c in q.items():
        _axpy(out, c, exp, reps[i])
    return out


@dataclass
class GroebnerBasis:
    rank: int
    nvars: int
    ninputs: int
    inputs: list  # input generators as vecs
    gens: list  # basis elements as vecs
    reps: list  # reps[i]: cofactors of gens[i] over the inputs, a vec of rank ninputs
    pairs_used: int = 0

    def elements(self):
        return [from_vec(g, self.rank, self.nvars) for g in self.gens]

    def leads(self):
        return [lead(g)[0] for g in self.gens]


def reduce_vec(f: dict, gens: list, full=True):
    """Divide f by gens; returns (remainder, quotients as {(exp, i): c})."""
    f = dict(f)
    rem = {}
    q = {}
    leads = [lead(g) for g in gens]
    while f:
        t, c = lead(f)
        exp, pos = t
        for i, ((gexp, gpos), gc) in enumerate(leads):
            if gpos != pos:
                continue
            m = _mono_div(exp, gexp)
            if m is None:
                continue
            k = c / gc
            _axpy(f, -k, m, gens[i])
            qt = (m, i)
            s = q.get(qt, 0) + k
            if s:
                q[qt] = s
            else:
                q.pop(qt, None)
            break
        else:
            if not full:
                rem.update(f)
                break
            rem[t] = c
            del f[t]
    return rem, q


def _spoly(gens, i, j):
    (ei, pi), ci = lead(gens[i])
    (ej, pj), cj = lead(gens[j])
    assert pi == pj
    l = _lcm(ei, ej)
    mi = _mono_div(l, ei)
    mj = _mono_div(l, ej)
    s = _axpy({}, 1 / ci, mi, gens[i])
    _axpy(s, -1 / cj, mj, gens[j])
    return s, (mi, 1 / ci), (mj, -1 / cj)


def groebner(gens: Sequence[Sequence[Poly]], budget: int = DEFAULT_BUDGET, nvars=None) -> GroebnerBasis:
    """Groebner basis of the submodule generated by gens (common rank)."""
    gens = [list(g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator")
    rank = len(gens[0])
    if any(len(g) != rank for g in gens):
        raise ValueError("generators of different rank")
    if nvars is None:
        nvars = next((p.nvars for g in gens for p in g), 0)
    inputs = [to_vec(g) for g in gens]
    G, reps = [], []
    for l, f in enumerate(inputs):
        if f:
            G.append(dict(f))
            reps.append(unit_vec(l, nvars))

    def pair_lcm(i, j):
        (ei, _), _ = lead(G[i])
        (ej, pos), _ = lead(G[j])
        return (_lcm(ei, ej), pos)

    def same_pos(i, j):
        return lead(G[i])[0][1] == lead(G[j])[0][1]

    pending = {(i, j) for j in range(len(G)) for i in range(j) if same_pos(i, j)}
    used = 0
    while pending:
        pair = min(pending, key=lambda p: (_key(pair_lcm(*p)), p))
        pending.discard(pair)
        i, j = pair
        lcm_t = pair_lcm(i, j)
        ei, ej = lead(G[i])[0][0], lead(G[j])[0][0]
        if rank == 1 and all(min(a, b) == 0 for a, b in zip(ei, ej)):
            continue
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            (ek, pk), _ = lead(G[k])
            if pk != lcm_t[1] or _mono_div(lcm_t[0], ek) is None:
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                skip = True
                break
        if skip:
            continue
        used += 1
        if used > budget:
            raise BudgetExceeded(f"more than {budget} S-pairs")
        s, (mi, ci), (mj, cj) = _spoly(G, i, j)
        r, q = reduce_vec(s, G)
        if not r:
            continue
        rep = _axpy({}, ci, mi, reps[i])
        _axpy(rep, cj, mj, reps[j])
        for (exp, k), c in q.items():
            _axpy(rep, -c, exp, reps[k])
        G.append(r)
        reps.append(rep)
        n = len(G) - 1
        pending |= {(k, n) for k in range(n) if same_pos(k, n)}
    return GroebnerBasis(rank, nvars, len(inputs), inputs, G, reps, used)


def reduced(gb: GroebnerBasis) -> GroebnerBasis:
    """Minimal, fully interreduced, monic version of a basis (cofactors kept)."""
    idx = sorted(range(len(gb.gens)), key=lambda i: _key(lead(gb.gens[i])[0]))
    keep = []
    for i in idx:
        (ei, pi), _ = lead(gb.gens[i])
        if any(
            lead(gb.gens[k])[0][1] == pi and _mono_div(ei, lead(gb.gens[k])[0][0]) is not None
            for k in keep
        ):
            continue
        keep.append(i)
    gens = [dict(gb.gens[i]) for i in keep]
    reps = [dict(gb.reps[i]) for i in keep]
    for a in range(len(gens)):
        others = [gens[b] for b in range(len(gens)) if b != a]
        other_idx = [b for b in range(len(gens)) if b != a]
        r, q = reduce_vec(gens[a], others)
        rep = dict(reps[a])
        for (exp, k), c in q.items():
            _axpy(rep, -c, exp, reps[other_idx[k]])
        _, lc = lead(r)
        gens[a] = {t: v / lc for t, v in r.items()}
        reps[a] = {t: v / lc for t, v in rep.items()}
    return GroebnerBasis(gb.rank, gb.nvars, gb.ninputs, gb.inputs, gens, reps, gb.pairs_used)


def reduce(f: Sequence[Poly], gb: GroebnerBasis) -> list:
    """Normal form of f with respect to the basis."""
    r, _ = reduce_vec(to_vec(f), gb.gens)
    return from_vec(r, gb.rank, gb.nvars)


def membership(f: Sequence[Poly], gb: GroebnerBasis):
    """(is_member, cofactors) with f == sum(cofactors[l] * inputs[l]) when a member."""
    r, q = reduce_vec(to_vec(f), gb.gens)
    if r:
        return False, None
    cof = from_vec(_combine(q, gb.reps), gb.ninputs, gb.nvars)
    check = {}
    for (exp, l), c in _combine(q, gb.reps).items():
        _axpy(check, c, exp, gb.inputs[l])
    assert check == to_vec(f), "cofactors do not reproduce the element"
    return True, cof


def combine(cofactors: Sequence[Poly], gens: Sequence[Sequence[Poly]]) -> list:
    """sum(cofactors[l] * gens[l]) as a list of polynomials."""
    rank = len(gens[0])
    nvars = cofactors[0].nvars
    out = [Poly(nvars)] * rank
    for c, g in zip(cofactors, gens):
        if c:
            out = [a + c * b for a, b in zip(out, g)]
    return out


def _raw_syzygies(gb: GroebnerBasis) -> list:
    nvars, n = gb.nvars, gb.ninputs
    G = gb.gens
    out = []
    for l, f in enumerate(gb.inputs):
        if not f:
            out.append(unit_vec(l, nvars))
            continue
        r, q = reduce_vec(f, G)
        assert not r
        s = unit_vec(l, nvars)
        for t, v in _combine(q, gb.reps).items():
            s[t] = s.get(t, 0) - v
            if not s[t]:
                del s[t]
        if s:
            out.append(s)
    for j in range(len(G)):
        for i in range(j):
            if lead(G[i])[0][1] != lead(G[j])[0][1]:
                continue
            s, (mi, ci), (mj, cj) = _spoly(G, i, j)
            r, q = reduce_vec(s, G)
            assert not r, "input is not a Groebner basis"
            sigma = {(mi, i): ci}
            sigma[(mj, j)] = sigma.get((mj, j), 0) + cj
            for t, v in q.items():
                sigma[t] = sigma.get(t, 0) - v
            sigma = {t: v for t, v in sigma.items() if v}
            mapped = _combine(sigma, gb.reps)
            if mapped:
                out.append(mapped)
    return out


def _dedupe(vecs):
    seen = []
    for v in vecs:
        if v and v not in seen:
            seen.append(v)
    return seen


def prune(vecs: list, rank: int, nvars: int, budget: int = DEFAULT_BUDGET) -> list:
    """Drop elements lying in the submodule generated by the remaining ones."""
    vecs = _dedupe(vecs)
    order = sorted(range(len(vecs)), key=lambda i: _key(lead(vecs[i])[0]), reverse=True)
    alive = set(range(len(vecs)))
    for i in order:
        rest = [vecs[k] for k in sorted(alive - {i})]
        if not rest:
            continue
        gb = groebner([from_vec(v, rank, nvars) for v in rest], budget, nvars)
        r, _ = reduce_vec(vecs[i], gb.gens)
        if not r:
            alive.discard(i)
    return [vecs[i] for i in sorted(alive)]


def syzygies(gens: Sequence[Sequence[Poly]], budget: int = DEFAULT_BUDGET, minimal=True, nvars=None) -> list:
    """Generators of the first syzygy module of gens, as lists of len(gens) Polys.

    With ``minimal`` the Schreyer generators are replaced by a reduced
    Groebner basis of the syzygy module with redundant members removed.
    """
    gens = [list(g) for g in gens]
    if nvars is None:
        nvars = next((p.nvars for g in gens for p in g), 0)
    n = len(gens)
    if gens and len(gens[0]) == 0:
        raw = [unit_vec(l, nvars) for l in range(n)]
    else:
        gb = groebner(gens, budget, nvars)
        raw = _raw_syzygies(gb)
    raw = _dedupe(raw)
    if minimal and raw:
        sgb = reduced(groebner([from_vec(v, n, nvars) for v in raw], budget, nvars))
        raw = prune(sgb.gens, n, nvars, budget)
    out = [from_vec(v, n, nvars) for v in raw]
    for s in out:
        if gens and len(gens[0]):
            total = combine(s, gens)
            assert all(x.is_zero() for x in total), "syzygy check failed"
    return out
