"""Root-system data for the classical types and G2.

Weights are tuples of Fractions giving coefficients in the simple-root basis.
Cartan entries follow ``a[i][j] = <alpha_i, alpha_j^vee>``, so that
``s_j(alpha_i) = alpha_i - a[i][j] alpha_j``.  Nodes use Bourbaki numbering
and every public index is 1-based.

A polarization stores the values ``alpha_i(xi)`` directly; a weight is
evaluated on it by linearity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

Weight = tuple  # tuple[Fraction, ...]
Polarization = tuple  # tuple[Fraction, ...], the values alpha_i(xi)


class NotPolarizing(ValueError):
    """Raised when a covector vanishes on some edge label."""


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in "ABCDG" or len(self.family) != 1:
            raise ValueError(f"unsupported Lie family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if self.family == "G" and self.rank != 2:
            raise ValueError("type G requires rank 2")
        if self.family == "D" and self.rank < 3:
            raise ValueError("type D requires rank >= 3")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Za-z])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _euclidean_simple_roots(lt: LieType):
    r = lt.rank
    f = lt.family

    def e(i, n):
        v = [0] * n
        v[i] = 1
        return v

    def diff(i, n):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        return v

    if f == "A":
        return [diff(i, r + 1) for i in range(r)]
    if f == "G":
        return [[1, -1, 0], [-2, 1, 1]]
    roots = [diff(i, r) for i in range(r - 1)]
    if f == "B":
        roots.append(e(r - 1, r))
    elif f == "C":
        roots.append([2 * x for x in e(r - 1, r)])
    else:  # D
        v = [0] * r
        v[r - 2] = v[r - 1] = 1
        roots.append(v)
    return roots


def cartan_matrix(lt: LieType):
    """Cartan matrix with ``a[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``."""
    roots = _euclidean_simple_roots(lt)

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    return tuple(
        tuple(Fraction(2 * dot(ri, rj), dot(rj, rj)) for rj in roots) for ri in roots
    )


def _check_index(j, cm):
    if not 1 <= j <= len(cm):
        raise IndexError(f"simple root index {j} out of range 1..{len(cm)}")


def simple_root(i: int, r: int) -> Weight:
    return tuple(Fraction(int(k == i - 1)) for k in range(r))


def weight(coords) -> Weight:
    return tuple(Fraction(c) for c in coords)


def pairing(beta: Weight, j: int, cm) -> Fraction:
    """The coroot pairing <beta, alpha_j^vee>."""
    _check_index(j, cm)
    return sum((c * cm[i][j - 1] for i, c in enumerate(beta)), Fraction(0))


def reflect(j: int, beta: Weight, cm) -> Weight:
    """Apply the simple reflection s_j to a weight."""
    p = pairing(beta, j, cm)
    out = list(beta)
    out[j - 1] -= p
    return tuple(out)


def reflect_word(letters: Sequence[int], beta: Weight, cm) -> Weight:
    """Apply s_{l_1} s_{l_2} ... s_{l_k} (rightmost first)."""
    for j in reversed(letters):
        beta = reflect(j, beta, cm)
    return beta


def negate(beta: Weight) -> Weight:
    return tuple(-c for c in beta)


def evaluate(beta: Weight, xi: Polarization) -> Fraction:
    return sum((c * x for c, x in zip(beta, xi)), Fraction(0))


def reflect_pol(j: int, xi: Polarization, cm) -> Polarization:
    """Contragredient reflection: evaluate(beta, reflect_pol(j, xi)) == evaluate(reflect(j, beta), xi)."""
    _check_index(j, cm)
    xj = xi[j - 1]
    return tuple(x - cm[i][j - 1] * xj for i, x in enumerate(xi))


def is_polarizing(xi: Polarization, labels) -> bool:
    return all(evaluate(beta, xi) != 0 for beta in labels)


def collinear(u: Weight, v: Weight) -> bool:
    """True if u and v span at most a line (both assumed nonzero)."""
    n = len(u)
    return all(u[a] * v[b] == u[b] * v[a] for a in range(n) for b in range(a + 1, n))


def line_representative(beta: Weight) -> Weight:
    """The member of +-beta whose lowest-index nonzero coefficient is positive."""
    for c in beta:
        if c:
            return beta if c > 0 else negate(beta)
    raise ValueError("zero weight has no line")


def positive_roots(cm):
    """All positive roots, by closing the simple roots under simple reflections."""
    r = len(cm)
    found = {simple_root(i, r) for i in range(1, r + 1)}
    frontier = list(found)
    while frontier:
        nxt = []
        for beta in frontier:
            for j in range(1, r + 1):
                gamma = reflect(j, beta, cm)
                if all(c >= 0 for c in gamma) and gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return sorted(found, key=lambda b: (sum(b), tuple(-c for c in b)))


@dataclass(frozen=True)
class RootSystem:
    """A Lie type bundled with its Cartan matrix."""

    lie_type: LieType

    @cached_property
    def cartan(self):
        return cartan_matrix(self.lie_type)

    @property
    def rank(self):
        return self.lie_type.rank

    @classmethod
    def parse(cls, text):
        return cls(LieType.parse(text))

    def simple_root(self, i):
        _check_index(i, self.cartan)
        return simple_root(i, self.rank)

    def reflect(self, j, beta):
        return reflect(j, beta, self.cartan)

    def __str__(self):
        return str(self.lie_type)
