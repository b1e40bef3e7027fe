"""Assignments on Bott-Samelson graphs and the bases of the assignment module.

Two bases are built letter by letter:

* the cohomological basis ``H^I`` by the block recursion
  ``H^[I,j] = [[H, 0], [s_j H, alpha_j s_j H]]``;
* the assignment basis ``A^I`` by solving ``A Delta == 0 (mod alpha_j)``
  through a row reduction over ``S(t*)/(alpha_j)`` and the matrix
  ``U = [[alpha I, -C], [0, I]]``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .bsgraph import BSGraph, build_graph
from .polyring import (
    NotDivisible,
    Poly,
    RationalFunction,
    block,
    column,
    determinant,
    divides,
    exact_divide,
    mat_identity,
    mat_map,
    mat_mul,
    mat_zero,
    poly_from_json,
    poly_to_json,
    reduce_mod_linear,
    render,
    weyl_act,
)
from .rootsys import RootSystem, line_representative, negate

log = logging.getLogger(__name__)


class RREFObstruction(ArithmeticError):
    """The reduction mod alpha could not reach the form [[I, C], [0, 0]]."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial

    def dump(self):
        if self.partial is None:
            return str(self)
        rows = ["[" + ", ".join(render(x) for x in row) + "]" for row in self.partial]
        return str(self) + "\npartially reduced matrix:\n" + "\n".join(rows)


class FaceDeltaFailure(ValueError):
    """The face delta construction did not produce an assignment."""


# ---------------------------------------------------------------------------
# assignments

@dataclass(frozen=True)
class Assignment:
    graph: BSGraph
    values: tuple

    def __post_init__(self):
        if len(self.values) != len(self.graph.vertices):
            raise ValueError("one value per vertex required")

    def __getitem__(self, v):
        return self.values[v]

    def support(self):
        return [v for v, x in enumerate(self.values) if x]

    def scale(self, p: Poly):
        return Assignment(self.graph, tuple(p * x for x in self.values))

    def __add__(self, other):
        return Assignment(self.graph, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return Assignment(self.graph, tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self):
        return Assignment(self.graph, tuple(-x for x in self.values))


def make_assignment(g: BSGraph, values, check=True) -> Assignment:
    values = tuple(values)
    if check and not is_assignment(g, values):
        raise ValueError("values violate an edge congruence")
    return Assignment(g, values)


def is_assignment(g: BSGraph, values: Sequence[Poly]) -> bool:
    if len(values) != len(g.vertices):
        raise ValueError("one value per vertex required")
    for v, w, lab in g.undirected_edges():
        diff = values[v] - values[w]
        if diff and not divides(Poly.linear(lab), diff):
            return False
    return True


def assignment_to_json(eta: Assignment) -> dict:
    return {
        "type": str(eta.graph.rootsys),
        "word": list(eta.graph.word),
        "values": [poly_to_json(x) for x in eta.values],
    }


def assignment_from_json(obj: dict, rootsys: RootSystem | None = None) -> Assignment:
    if rootsys is None:
        rootsys = RootSystem.parse(obj["type"])
    g = build_graph(rootsys, obj["word"])
    values = tuple(poly_from_json(x, rootsys.rank) for x in obj["values"])
    return Assignment(g, values)


# ---------------------------------------------------------------------------
# cohomological basis

@dataclass
class BasisMatrix:
    kind: str  # "assignment" or "cohomological"
    graph: BSGraph
    matrix: list  # rows = vertices, columns = subwords
    steps: list = field(default_factory=list, repr=False)

    @property
    def size(self):
        return len(self.matrix)

    def column(self, j) -> Assignment:
        return Assignment(self.graph, tuple(column(self.matrix, j)))

    def columns(self):
        return [self.column(j) for j in range(self.size)]

    def to_json(self):
        names = [self.graph.name(v) for v in self.graph.vertices]
        return {
            "kind": self.kind,
            "type": str(self.graph.rootsys),
            "word": list(self.graph.word),
            "rows": names,
            "columns": names,
            "matrix": [[poly_to_json(x) for x in row] for row in self.matrix],
        }


def _weyl_matrix(j, m, cm):
    return mat_map(lambda p: weyl_act(j, p, cm), m)


@lru_cache(maxsize=None)
def _cohomology_matrix(rootsys: RootSystem, word: tuple):
    r = rootsys.rank
    cm = rootsys.cartan
    h = [[Poly.const(r, 1)]]
    for j in word:
        sh = _weyl_matrix(j, h, cm)
        alpha = Poly.var(r, j)
        n = len(h)
        h = block(h, mat_zero(r, n, n), sh, mat_map(lambda p: alpha * p, sh))
    return h


def cohomology_basis(rootsys: RootSystem, word: Sequence[int]) -> BasisMatrix:
    word = tuple(word)
    g = build_graph(rootsys, word)
    return BasisMatrix("cohomological", g, [list(row) for row in _cohomology_matrix(rootsys, word)])


def h_factors(g: BSGraph, col: int, row: int):
    """Weights whose product is H_col(row), or None when col is not below row."""
    if col & ~row:
        return None
    cm = g.rootsys.cartan
    out = []
    for t in range(g.d):
        if col >> t & 1:
            beta = g.rootsys.simple_root(g.word[t])
            for u in range(t + 1, g.d):
                if row >> u & 1:
                    beta = g.rootsys.reflect(g.word[u], beta)
            out.append(beta)
    return out


def h_closed_form(g: BSGraph, col: int, row: int) -> Poly:
    factors = h_factors(g, col, row)
    if factors is None:
        return Poly(g.rank)
    out = Poly.const(g.rank, 1)
    for beta in factors:
        out = out * Poly.linear(beta)
    return out


# ---------------------------------------------------------------------------
# row reduction over S(t*)/(alpha)

@dataclass
class RREFResult:
    reduced: list  # M with entries reduced mod alpha
    rref: list  # [[I, C], [0, 0]] in the original column order
    pivots: list  # pivot columns, increasing
    free: list  # free columns, increasing
    C: list  # len(pivots) x len(free)

    @property
    def permutation(self):
        return self.pivots + self.free


def _try_divide_row(row, p):
    try:
        return [exact_divide(x, p) if x else x for x in row]
    except NotDivisible:
        return None


def rref_mod(M, alpha: Poly) -> RREFResult:
    """Reduce M modulo alpha and row-reduce it, keeping polynomial entries.

    Unit pivots are used first; otherwise elimination cross-multiplies and
    divides each pivot row by its pivot at the end.  Raises RREFObstruction
    if some division is not exact.
    """
    reduced = [[reduce_mod_linear(x, alpha) for x in row] for row in M]
    R = [list(row) for row in reduced]
    n = len(R)
    m = len(R[0]) if R else 0
    pivot_of_row = {}
    pivot_cols = set()

    def open_rows():
        return [i for i in range(n) if i not in pivot_of_row]

    while True:
        choice = None
        for c in range(m):
            if c in pivot_cols:
                continue
            for i in open_rows():
                x = R[i][c]
                if x and x.is_constant():
                    choice = (i, c)
                    break
            if choice:
                break
        if choice:
            i, c = choice
            inv = 1 / R[i][c].constant_value()
            R[i] = [x * inv for x in R[i]]
            for k in range(n):
                q = R[k][c]
                if k != i and q:
                    R[k] = [a - q * b for a, b in zip(R[k], R[i])]
        else:
            for c in range(m):
                if c in pivot_cols:
                    continue
                cands = [i for i in open_rows() if R[i][c]]
                if cands:
                    i = min(cands, key=lambda k: (R[k][c].degree(), len(R[k][c].terms), k))
                    choice = (i, c)
                    break
            if not choice:
                break
            i, c = choice
            p = R[i][c]
            for k in range(n):
                q = R[k][c]
                if k != i and q:
                    row = [p * a - q * b for a, b in zip(R[k], R[i])]
                    R[k] = _try_divide_row(row, p) or row
        pivot_of_row[i] = c
        pivot_cols.add(c)

    for i, c in pivot_of_row.items():
        row = _try_divide_row(R[i], R[i][c])
        if row is None:
            raise RREFObstruction(
                f"pivot {render(R[i][c])} does not divide its row modulo {render(alpha)}", R
            )
        R[i] = row
    for i in open_rows():
        assert not any(R[i]), "non-pivot row survived elimination"

    pivots = sorted(pivot_cols)
    free = [c for c in range(m) if c not in pivot_cols]
    row_of = {c: i for i, c in pivot_of_row.items()}
    zero = Poly(alpha.nvars)
    rref = [R[row_of[c]] for c in pivots] + [[zero] * m for _ in range(n - len(pivots))]
    C = [[R[row_of[c]][f] for f in free] for c in pivots]
    return RREFResult(reduced, rref, pivots, free, C)


def u_matrix(res: RREFResult, alpha: Poly):
    """U = [[alpha I, -C], [0, I]] in permuted order, returned in original order."""
    perm = res.permutation
    n = len(perm)
    nb = len(res.pivots)
    U = mat_zero(alpha.nvars, n, n)
    one = Poly.const(alpha.nvars, 1)
    for a in range(nb):
        U[perm[a]][perm[a]] = alpha
        for b in range(len(res.free)):
            U[perm[a]][perm[nb + b]] = -res.C[a][b]
    for b in range(nb, n):
        U[perm[b]][perm[b]] = one
    return U


@dataclass
class InductiveStep:
    letter: int
    rref: RREFResult
    U: list


@lru_cache(maxsize=None)
def _assignment_basis(rootsys: RootSystem, word: tuple):
    r = rootsys.rank
    cm = rootsys.cartan
    A = [[Poly.const(r, 1)]]
    steps = []
    for j in word:
        alpha = Poly.var(r, j)
        res = rref_mod(A, alpha)
        U = u_matrix(res, alpha)
        sA = _weyl_matrix(j, A, cm)
        n = len(A)
        A = block(A, mat_zero(r, n, n), sA, mat_mul(sA, U))
        steps.append(InductiveStep(j, res, U))
        log.debug("letter %d: pivots %s free %s", j, res.pivots, res.free)
    return A, steps


def assignment_basis(rootsys: RootSystem, word: Sequence[int]) -> BasisMatrix:
    word = tuple(word)
    A, steps = _assignment_basis(rootsys, word)
    return BasisMatrix("assignment", build_graph(rootsys, word), [list(r) for r in A], list(steps))


# ---------------------------------------------------------------------------
# coordinates in the cohomological basis

def express_in_cohomology(eta: Assignment):
    """Coefficients c with H^I c == eta, found by forward substitution."""
    g = eta.graph
    H = _cohomology_matrix(g.rootsys, g.word)
    coeffs = []
    for J in g.vertices:
        acc = RationalFunction(eta.values[J])
        for K in range(J):
            if H[J][K] and coeffs[K].num:
                acc = acc - coeffs[K] * H[J][K]
        diag = [Poly.linear(beta) for beta in h_factors(g, J, J)]
        coeffs.append(acc.divide_by_linear(*diag))
    return coeffs


def is_cohomological(eta: Assignment) -> bool:
    return all(c.is_polynomial() for c in express_in_cohomology(eta))


def transition_matrix(rootsys: RootSystem, word: Sequence[int]):
    """V^I with A^I = H^I V^I, built by the block recursion over letters."""
    word = tuple(word)
    r = rootsys.rank
    cm = rootsys.cartan
    _, steps = _assignment_basis(rootsys, word)
    one = RationalFunction(Poly.const(r, 1))
    zero = RationalFunction(Poly(r))
    V = [[one]]
    for step in steps:
        j = step.letter
        alpha = Poly.var(r, j)
        n = len(V)
        dV = [[x.divided_difference(j, cm) for x in row] for row in V]
        sV = [[x.weyl_act(j, cm).divide_by_linear(alpha) for x in row] for row in V]
        sVU = []
        for row in sV:
            out = []
            for c in range(n):
                acc = zero
                for t in range(n):
                    u = step.U[t][c]
                    if u and row[t].num:
                        acc = acc + row[t] * u
                out.append(acc)
            sVU.append(out)
        V = [row + [zero] * n for row in V] + [a + b for a, b in zip(dV, sVU)]
    return V


@dataclass
class DefectReport:
    basis: BasisMatrix
    coefficients: list  # per column of A, its H-coordinates
    defects: list  # (column index, coefficients) with a non-polynomial entry
    transition: list  # V from the recursion; agrees with coefficients


def defect_report(rootsys: RootSystem, word: Sequence[int]) -> DefectReport:
    A = assignment_basis(rootsys, word)
    coeffs = [express_in_cohomology(col) for col in A.columns()]
    V = transition_matrix(rootsys, word)
    for J, cvec in enumerate(coeffs):
        for K, c in enumerate(cvec):
            if V[K][J] != c:
                raise AssertionError(
                    f"transition recursion disagrees at ({K}, {J}): {V[K][J]} vs {c}"
                )
    defects = [(J, c) for J, c in enumerate(coeffs) if not all(x.is_polynomial() for x in c)]
    return DefectReport(A, coeffs, defects, V)


# ---------------------------------------------------------------------------
# delta classes and localization

def _distinct_line_product(g: BSGraph, weights):
    lines = []
    for beta in weights:
        rep = line_representative(beta)
        if rep not in lines and negate(rep) not in lines:
            lines.append(rep)
    out = Poly.const(g.rank, 1)
    for beta in lines:
        out = out * Poly.linear(beta)
    return out


def delta_vertex(g: BSGraph, v: int) -> Assignment:
    """Supported at v, with value the product of the distinct isotropy lines at v."""
    zero = Poly(g.rank)
    values = [zero] * len(g.vertices)
    values[v] = _distinct_line_product(g, g.isotropy[v])
    eta = Assignment(g, tuple(values))
    assert is_assignment(g, eta.values)
    return eta


def face_of(g: BSGraph, masks: Sequence[int]) -> dict:
    """The smallest face containing the given vertices, as {position: bit}."""
    fixed = {}
    for t in range(g.d):
        bits = {m >> t & 1 for m in masks}
        if len(bits) == 1:
            fixed[t + 1] = bits.pop()
    return fixed


def delta_face(g: BSGraph, fixed: dict) -> Assignment:
    """Delta class of the face fixing positions ``fixed`` (1-based) to the given bits.

    At each face vertex the value is the product of the distinct lines among
    the isotropy weights normal to the face.
    """
    positions = sorted(fixed)
    zero = Poly(g.rank)
    values = []
    for v in g.vertices:
        if all((v >> (t - 1) & 1) == fixed[t] for t in positions):
            values.append(_distinct_line_product(g, [g.isotropy[v][t - 1] for t in positions]))
        else:
            values.append(zero)
    if not is_assignment(g, values):
        raise FaceDeltaFailure(f"face {fixed} of {list(g.word)} gives no delta assignment")
    return Assignment(g, tuple(values))


def integrate(eta: Assignment) -> RationalFunction:
    """Localization sum of eta(p) over the product of isotropy weights at p."""
    g = eta.graph
    total = RationalFunction(Poly(g.rank))
    for v in g.vertices:
        if eta.values[v]:
            total = total + RationalFunction(eta.values[v]).divide_by_linear(
                *[Poly.linear(beta) for beta in g.isotropy[v]]
            )
    return total


def _block_det(m) -> Poly:
    n = len(m)
    h = n // 2
    if n >= 2 and n % 2 == 0 and not any(m[i][j] for i in range(h) for j in range(h, n)):
        top = [row[:h] for row in m[:h]]
        bottom = [row[h:] for row in m[h:]]
        return _block_det(top) * _block_det(bottom)
    return determinant(m)


def basis_determinant(basis: BasisMatrix) -> Poly:
    """Fraction-free determinant, splitting off zero upper-right blocks first."""
    return _block_det(basis.matrix)


