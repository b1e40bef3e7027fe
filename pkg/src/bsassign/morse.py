"""Morse-type generators of the assignment module.

A polarization orients every edge towards the side where its label is
positive.  For each vertex p the assignments supported on the flow-up of p
are ``sum_J c^J A_J`` with ``c`` a syzygy of the columns of ``A`` restricted
to the vertices outside the flow-up; their values at p generate the ideal
``I_(p)``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from typing import Sequence

from . import gb
from .assignmod import Assignment, BasisMatrix, assignment_basis, is_assignment
from .bsgraph import BSGraph
from .polyring import Poly, poly_to_json, render
from .rootsys import NotPolarizing, RootSystem, evaluate, is_polarizing

log = logging.getLogger(__name__)


class AcyclicityViolation(AssertionError):
    """An oriented graph turned out to have a cycle."""


@dataclass(frozen=True)
class OrientedGraph:
    base: BSGraph
    xi: tuple
    ascending: frozenset  # (src, dst) pairs with label(src, dst)(xi) > 0
    order: tuple  # a topological order of the vertices

    def up(self, v):
        return [w for w in self.base.neighbors(v) if (v, w) in self.ascending]

    def down(self, v):
        return [w for w in self.base.neighbors(v) if (w, v) in self.ascending]


def parse_xi(text: str, rank: int) -> tuple:
    """Parse ``"1,1"`` (values alpha_i(xi)) or ``"positive"`` (all ones)."""
    if text.strip().lower() in ("positive", "pos", "+"):
        return (Fraction(1),) * rank
    vals = tuple(Fraction(x) for x in text.split(","))
    if len(vals) != rank:
        raise ValueError(f"xi needs {rank} values, got {len(vals)}")
    return vals


def orient(g: BSGraph, xi) -> OrientedGraph:
    xi = tuple(Fraction(x) for x in xi)
    if not is_polarizing(xi, g.edge_labels()):
        raise NotPolarizing(f"xi = {[str(x) for x in xi]} vanishes on an edge label")
    asc = frozenset((v, w) for v, w, lab in g.edges() if evaluate(lab, xi) > 0)
    ts = TopologicalSorter({w: [v for v in g.neighbors(w) if (v, w) in asc] for w in g.vertices})
    try:
        order = tuple(ts.static_order())
    except CycleError as exc:
        raise AcyclicityViolation(f"ascending edges contain a cycle: {exc.args[1]}") from exc
    return OrientedGraph(g, xi, asc, order)


def _closure(start, step):
    seen = {start}
    todo = deque([start])
    while todo:
        v = todo.popleft()
        for w in step(v):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return frozenset(seen)


def flow_up(og: OrientedGraph, p: int) -> frozenset:
    return _closure(p, og.up)


def flow_down(og: OrientedGraph, p: int) -> frozenset:
    return _closure(p, og.down)


@dataclass
class FlowUpGenerators:
    point: int
    flow: frozenset
    syzygies: list  # coefficient vectors over the columns of A
    assignments: list  # one Assignment per syzygy


def flowup_generators(basis: BasisMatrix, og: OrientedGraph, p: int, budget=gb.DEFAULT_BUDGET) -> FlowUpGenerators:
    """Generators of the assignments supported on the flow-up of p."""
    g = basis.graph
    r = g.rank
    flow = flow_up(og, p)
    outside = [v for v in g.vertices if v not in flow]
    cols = [[basis.matrix[v][J] for v in outside] for J in range(basis.size)]
    syz = gb.syzygies(cols, budget, nvars=r)
    syz.sort(key=_syzygy_key)
    etas = []
    kept = []
    for s in syz:
        values = tuple(
            sum((c * basis.matrix[v][J] for J, c in enumerate(s) if c), Poly(r)) for v in g.vertices
        )
        if not any(values):
            continue
        assert all(not values[v] for v in outside)
        assert is_assignment(g, values)
        kept.append(s)
        etas.append(Assignment(g, values))
    return FlowUpGenerators(p, flow, kept, etas)


def _syzygy_key(s):
    nz = [J for J, c in enumerate(s) if c]
    return (nz[-1] if nz else -1, max((c.degree() for c in s), default=-1), nz)


def sign_normalize(p: Poly) -> Poly:
    return -p if p and p.leading_coefficient() < 0 else p


@dataclass
class GeneratingIdeal:
    point: int
    generators: list  # nonzero values at the point, sign normalized
    minimal: list  # an irredundant subset

    @property
    def principal(self):
        return len(self.minimal) <= 1


def generating_ideal(p: int, gens: Sequence[Assignment], budget=gb.DEFAULT_BUDGET) -> GeneratingIdeal:
    vals = [sign_normalize(eta.values[p]) for eta in gens if eta.values[p]]
    minimal = minimize_ideal(vals, budget)
    return GeneratingIdeal(p, vals, minimal)


def minimize_ideal(vals, budget=gb.DEFAULT_BUDGET):
    """Drop generators lying in the ideal of the others (minimal for homogeneous input)."""
    vals = list(dict.fromkeys(vals))
    for i in sorted(range(len(vals)), key=lambda k: (vals[k].degree(), k), reverse=True):
        rest = [v for k, v in enumerate(vals) if k != i and v is not None]
        if vals[i] is None or not rest:
            continue
        ok, _ = gb.membership([vals[i]], gb.groebner([[v] for v in rest], budget))
        if ok:
            vals[i] = None
    return [v for v in vals if v is not None]


@dataclass
class MorseGenerator:
    point: int
    index: int  # 1-based within the point
    assignment: Assignment
    syzygy: list

    def name(self, g):
        return f"eta_{self.index}^{g.name(self.point)}"


@dataclass
class MorseReport:
    basis: BasisMatrix
    oriented: OrientedGraph
    flows: dict  # point -> frozenset
    per_point: dict  # point -> list[MorseGenerator]
    ideals: dict  # point -> GeneratingIdeal
    raw: list  # all generators in table order
    kept: list  # after minimalization
    eliminated: list = field(default_factory=list)
    cofactors: dict = field(default_factory=dict)  # eliminated name -> cofactors over kept


def morse_generators(rootsys: RootSystem, word: Sequence[int], xi, budget=gb.DEFAULT_BUDGET) -> MorseReport:
    basis = assignment_basis(rootsys, word)
    g = basis.graph
    og = orient(g, xi)
    flows, per_point, ideals = {}, {}, {}
    raw = []
    for p in g.vertices:
        fg = flowup_generators(basis, og, p, budget)
        flows[p] = fg.flow
        at_p = [(s, eta) for s, eta in zip(fg.syzygies, fg.assignments) if eta.values[p]]
        per_point[p] = [MorseGenerator(p, k + 1, eta, s) for k, (s, eta) in enumerate(at_p)]
        ideals[p] = generating_ideal(p, [eta for _, eta in at_p], budget)
        raw.extend(per_point[p])
        log.debug("%s: flow-up %d, %d generators", g.name(p), len(fg.flow), len(at_p))

    order = sorted(range(len(raw)), key=lambda k: (-len(flows[raw[k].point]), k))
    alive = set(range(len(raw)))
    eliminated, cofactors = [], {}
    for k in order:
        rest = sorted(alive - {k})
        if not rest:
            continue
        vecs = [list(raw[i].assignment.values) for i in rest]
        ok, cof = gb.membership(list(raw[k].assignment.values), gb.groebner(vecs, budget))
        if ok:
            alive.discard(k)
            eliminated.append(raw[k])
            cofactors[raw[k].name(g)] = {raw[i].name(g): c for i, c in zip(rest, cof) if c}
    kept = [raw[k] for k in sorted(alive)]

    span = gb.groebner([list(m.assignment.values) for m in kept], budget)
    for col in basis.columns():
        ok, _ = gb.membership(list(col.values), span)
        assert ok, "minimalized Morse generators no longer span the module"
    return MorseReport(basis, og, flows, per_point, ideals, raw, kept, eliminated, cofactors)


def report_to_json(rep: MorseReport) -> dict:
    g = rep.basis.graph
    pts = []
    for p in g.vertices:
        ideal = rep.ideals[p]
        pts.append(
            {
                "vertex": g.name(p),
                "flow_up": [g.name(v) for v in sorted(rep.flows[p])],
                "generators": [
                    {"name": m.name(g), "values": [poly_to_json(x) for x in m.assignment.values]}
                    for m in rep.per_point[p]
                ],
                "ideal": [poly_to_json(x) for x in ideal.generators],
                "ideal_minimal": [poly_to_json(x) for x in ideal.minimal],
                "principal": ideal.principal,
            }
        )
    return {
        "type": str(g.rootsys),
        "word": list(g.word),
        "xi": [[x.numerator, x.denominator] for x in rep.oriented.xi],
        "vertices": pts,
        "minimal_generators": [m.name(g) for m in rep.kept],
        "eliminated": [
            {"name": m.name(g), "relation": {k: poly_to_json(v) for k, v in rep.cofactors[m.name(g)].items()}}
            for m in rep.eliminated
        ],
    }


def report_to_text(rep: MorseReport) -> str:
    g = rep.basis.graph
    names = [g.name(v) for v in g.vertices]
    lines = [f"Morse generators for BS^[{','.join(map(str, g.word))}] in {g.rootsys}, xi = {[str(x) for x in rep.oriented.xi]}"]
    lines.append("generator        | " + " | ".join(names))
    for m in rep.raw:
        lines.append(f"{m.name(g):16} | " + " | ".join(render(x) for x in m.assignment.values))
    lines.append("")
    for p in g.vertices:
        ideal = rep.ideals[p]
        gens = ", ".join(render(x) for x in ideal.minimal)
        tag = "principal" if ideal.principal else "not principal"
        lines.append(f"I_({g.name(p)}) = <{gens}>  [{tag}]")
    lines.append("")
    for m in rep.eliminated:
        rel = " + ".join(f"({render(c)})*{n}" for n, c in rep.cofactors[m.name(g)].items())
        lines.append(f"eliminated {m.name(g)} = {rel}")
    return "\n".join(lines) + "\n"
