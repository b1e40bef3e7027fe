"""Brute-force degree-bounded checks, independent of the inductive construction.

The edge congruence ``ell | f(p) - f(q)`` is tested by restricting to the
hyperplane ``ell = 0`` (a sympy substitution), never through
``reduce_mod_linear``; ranks are taken with sympy's exact ``DomainMatrix``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .assignmod import BasisMatrix, assignment_basis
from .bsgraph import BSGraph
from .polyring import Poly, monomials_upto
from .rootsys import RootSystem


def _frac(c) -> Fraction:
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def _rank(rows: list, ncols: int) -> int:
    rows = [row for row in rows if any(row.values())]
    if not rows or not ncols:
        return 0
    data = {i: {j: QQ(v.numerator, v.denominator) for j, v in row.items()} for i, row in enumerate(rows)}
    return DomainMatrix(data, (len(rows), ncols), QQ).rank()


def _nullspace(rows: list, ncols: int) -> list:
    m = sympy.Matrix(len(rows), ncols, lambda i, j: rows[i].get(j, 0)) if rows else sympy.zeros(0, ncols)
    if not rows:
        return [sympy.eye(ncols).col(j) for j in range(ncols)]
    return m.nullspace()


def _hyperplane_images(label, k):
    """For each monomial of degree <= k, its restriction to {label = 0} as a coefficient dict."""
    r = len(label)
    kernel = sympy.Matrix([list(label)]).nullspace()
    ts = sympy.symbols(f"t1:{len(kernel) + 1}")
    point = [sum((ts[i] * kernel[i][c] for i in range(len(kernel))), sympy.Integer(0)) for c in range(r)]
    out = {}
    for mono in monomials_upto(r, k):
        expr = sympy.Integer(1)
        for x, e in zip(point, mono):
            expr *= x**e
        if ts:
            poly = sympy.Poly(sympy.expand(expr), *ts)
            out[mono] = {m: _frac(c) for m, c in poly.terms() if c != 0}
        else:
            out[mono] = {(): _frac(expr)} if expr != 0 else {}
    return out


def assignment_slice_dim(g: BSGraph, k: int) -> int:
    """dim_Q of vectors of degree-<=k polynomials satisfying every edge congruence."""
    monos = list(monomials_upto(g.rank, k))
    col = {(v, m): i for i, (v, m) in enumerate(product(g.vertices, monos))}
    ncols = len(col)
    rows = []
    cache = {}
    for v, w, lab in g.undirected_edges():
        if lab not in cache:
            cache[lab] = _hyperplane_images(lab, k)
        images = cache[lab]
        conds = {}
        for m in monos:
            for tm, c in images[m].items():
                row = conds.setdefault(tm, {})
                row[col[(v, m)]] = row.get(col[(v, m)], 0) + c
                row[col[(w, m)]] = row.get(col[(w, m)], 0) - c
        for row in conds.values():
            row = {j: x for j, x in row.items() if x != 0}
            if row:
                rows.append(row)
    return ncols - _rank(rows, ncols)


def module_slice_dim(basis: BasisMatrix, k: int) -> int:
    """dim_Q of the span of x^m A_J with total degree <= k."""
    g = basis.graph
    r = g.rank
    monos = list(monomials_upto(r, k))
    col = {(v, m): i for i, (v, m) in enumerate(product(g.vertices, monos))}
    rows = []
    for J in range(basis.size):
        colJ = [basis.matrix[v][J] for v in g.vertices]
        dJ = max(p.degree() for p in colJ)
        if dJ > k:
            continue
        for m in monomials_upto(r, k - dJ):
            row = {}
            for v, p in zip(g.vertices, colJ):
                for e, c in p.terms.items():
                    e2 = tuple(a + b for a, b in zip(e, m))
                    row[col[(v, e2)]] = c
            rows.append(row)
    return _rank(rows, len(col))


@dataclass
class OracleRow:
    degree: int
    brute_force: int
    from_basis: int

    @property
    def agrees(self):
        return self.brute_force == self.from_basis


def completeness_table(rootsys: RootSystem, word, K: int = 4) -> list:
    basis = assignment_basis(rootsys, word)
    return [
        OracleRow(k, assignment_slice_dim(basis.graph, k), module_slice_dim(basis, k))
        for k in range(K + 1)
    ]


def brute_force_syzygies(gens, K: int, nvars: int) -> list:
    """Q-basis of syzygies (c_1..c_n) of gens with every deg c_l <= K."""
    n = len(gens)
    rank = len(gens[0])
    monos = list(monomials_upto(nvars, K))
    unknowns = [(l, m) for l in range(n) for m in monos]
    conds = {}
    for idx, (l, m) in enumerate(unknowns):
        for pos in range(rank):
            for e, c in gens[l][pos].terms.items():
                key = (pos, tuple(a + b for a, b in zip(e, m)))
                row = conds.setdefault(key, {})
                row[idx] = row.get(idx, 0) + c
    rows = [{j: x for j, x in row.items() if x} for row in conds.values()]
    rows = [row for row in rows if row]
    out = []
    for vec in _nullspace(rows, len(unknowns)):
        comps = [dict() for _ in range(n)]
        for idx, val in enumerate(vec):
            if val != 0:
                l, m = unknowns[idx]
                comps[l][m] = _frac(val)
        out.append([Poly(nvars, comp) for comp in comps])
    return out
