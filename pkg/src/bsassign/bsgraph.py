"""The labeled fixed-point graph of a Bott-Samelson space.

Vertices are subwords of ``word = [i_1, ..., i_d]`` encoded as bitmasks, bit
``t - 1`` set iff position ``t`` is on.  Listing masks in increasing integer
order puts every vertex with last bit 0 before every vertex with last bit 1,
which is the right-to-left lexicographic order used by all basis matrices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .polyring import Poly, poly_to_json, render
from .rootsys import (
    NotPolarizing,
    RootSystem,
    collinear,
    evaluate,
    is_polarizing,
    negate,
    reflect,
)

log = logging.getLogger(__name__)


def parse_word(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.replace(" ", "").split(","))


def subword_label(word: Sequence[int], mask: int) -> str:
    parts = [str(i) if mask >> t & 1 else "0" for t, i in enumerate(word)]
    if not parts:
        return "[]"
    if all(len(p) == 1 for p in parts):
        return "".join(parts)
    return ",".join(parts)


def parse_subword(word: Sequence[int], text: str) -> int:
    """Mask of a subword written like ``"202"`` (or ``"2,0,2"``)."""
    text = text.strip()
    if text in ("", "[]"):
        parts = []
    elif "," in text:
        parts = [int(x) for x in text.split(",")]
    else:
        parts = [int(ch) for ch in text]
    if len(parts) != len(word):
        raise ValueError(f"subword {text!r} has wrong length for word {list(word)}")
    mask = 0
    for t, (p, i) in enumerate(zip(parts, word)):
        if p == i:
            mask |= 1 << t
        elif p != 0:
            raise ValueError(f"position {t + 1} of {text!r} must be 0 or {i}")
    return mask


@dataclass(frozen=True)
class BSGraph:
    rootsys: RootSystem
    word: tuple
    isotropy: tuple = field(repr=False)  # isotropy[mask][t] = weight for position t+1

    @property
    def d(self):
        return len(self.word)

    @property
    def rank(self):
        return self.rootsys.rank

    @property
    def vertices(self):
        return range(1 << self.d)

    def label(self, src: int, dst: int):
        """Label of the arrow src -> dst; the masks must differ in one bit."""
        diff = src ^ dst
        if diff == 0 or diff & (diff - 1):
            raise ValueError(f"{src} and {dst} are not adjacent")
        return self.isotropy[src][diff.bit_length() - 1]

    def neighbors(self, v: int):
        return [v ^ (1 << t) for t in range(self.d)]

    def edges(self):
        """All arrows (src, dst, label), both directions, in deterministic order."""
        return [(v, w, self.label(v, w)) for v in self.vertices for w in self.neighbors(v)]

    def undirected_edges(self):
        """One (low, high, label low->high) per edge."""
        return [(v, w, lab) for v, w, lab in self.edges() if v < w]

    def edge_labels(self):
        return {lab for _, _, lab in self.edges()}

    def label_poly(self, src, dst):
        return Poly.linear(self.label(src, dst))

    def name(self, mask):
        return subword_label(self.word, mask)

    def parse(self, text):
        return parse_subword(self.word, text)


def build_graph(rootsys: RootSystem, word: Sequence[int]) -> BSGraph:
    word = tuple(word)
    cm = rootsys.cartan
    for i in word:
        if not 1 <= i <= rootsys.rank:
            raise ValueError(f"letter {i} invalid for type {rootsys}")
    d = len(word)
    iso = []
    for mask in range(1 << d):
        weights = []
        for j in range(d):
            beta = rootsys.simple_root(word[j])
            for t in range(j, d):
                if mask >> t & 1:
                    beta = reflect(word[t], beta, cm)
            weights.append(beta)
        iso.append(tuple(weights))
    g = BSGraph(rootsys, word, tuple(iso))
    for v, w, lab in g.edges():
        assert g.label(w, v) == negate(lab)
    return g


def isotropy_weights(g: BSGraph, v: int):
    return list(g.isotropy[v])


def has_collinear_weights(g: BSGraph, v: int) -> bool:
    return any(collinear(a, b) for a, b in combinations(g.isotropy[v], 2))


def is_gkm(rootsys: RootSystem, word: Sequence[int]) -> bool:
    distinct = len(set(word)) == len(word)
    if __debug__:
        g = build_graph(rootsys, word)
        pairwise = not any(has_collinear_weights(g, v) for v in g.vertices)
        assert pairwise == distinct, f"GKM letter test disagrees with weights for {word}"
    return distinct


def export_dot(g: BSGraph, orientation=None) -> str:
    """Graphviz text; with a polarization only ascending arrows are drawn."""
    if orientation is not None and not is_polarizing(orientation, g.edge_labels()):
        raise NotPolarizing(f"covector {list(map(str, orientation))} vanishes on an edge label")
    directed = orientation is not None
    lines = ["digraph BS {" if directed else "graph BS {"]
    lines.append(f'  label="BS^[{",".join(map(str, g.word))}] ({g.rootsys})";')
    for v in g.vertices:
        lines.append(f'  "{g.name(v)}";')
    for v, w, lab in g.undirected_edges():
        if directed:
            if evaluate(lab, orientation) < 0:
                v, w, lab = w, v, negate(lab)
            arrow = "->"
        else:
            arrow = "--"
        lines.append(f'  "{g.name(v)}" {arrow} "{g.name(w)}" [label="{render(Poly.linear(lab))}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: BSGraph) -> dict:
    return {
        "type": str(g.rootsys),
        "word": list(g.word),
        "vertices": list(g.vertices),
        "names": [g.name(v) for v in g.vertices],
        "edges": [
            {"from": v, "to": w, "label": poly_to_json(Poly.linear(lab))} for v, w, lab in g.edges()
        ],
    }
