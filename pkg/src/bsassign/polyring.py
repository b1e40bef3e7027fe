"""Exact sparse polynomials over Q in the simple-root variables a1, ..., ar.

Terms are stored as ``{exponent tuple: Fraction}`` with no zero coefficients,
so two equal polynomials always carry identical term maps.  Monomials are
compared in graded reverse lexicographic order with a1 > a2 > ... > ar.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def grevlex_key(exp):
    """Sort key for monomials; larger key means larger monomial."""
    return (sum(exp), tuple(-e for e in reversed(exp)))


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class Poly:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = _coerce(c)
                if c:
                    exp = tuple(exp)
                    if len(exp) != nvars:
                        raise ValueError("exponent length does not match variable count")
                    clean[exp] = c
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        """The variable a_i (1-based)."""
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def linear(cls, coords: Sequence):
        """Embed a weight given in simple-root coordinates as a linear form."""
        n = len(coords)
        terms = {}
        for i, c in enumerate(coords):
            exp = [0] * n
            exp[i] = 1
            terms[tuple(exp)] = c
        return cls(n, terms)

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # basic queries
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and sum(next(iter(self.terms))) == 0)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self):
        """Terms in decreasing monomial order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grevlex_key)
        return exp, self.terms[exp]

    def leading_coefficient(self):
        return self.leading_term()[1]

    # arithmetic
    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(self.nvars, _coerce(other))

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _coerce(other)
            if not c:
                return Poly(self.nvars)
            return Poly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Poly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, exp, c):
        """Multiply by the single term c * x^exp."""
        if not c:
            return Poly(self.nvars)
        return Poly._raw(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self.terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({render(self)})"

    def __str__(self):
        return render(self)

    def evaluate(self, point: Sequence):
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= Fraction(x) ** k
            total += t
        return total

    def substitute(self, images: Sequence["Poly"]):
        """Ring map sending a_i to images[i-1]."""
        out = Poly(images[0].nvars if images else self.nvars)
        powers = [{0: Poly.const(out.nvars, 1)} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        for e, c in self.terms.items():
            t = Poly.const(out.nvars, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            out = out + t
        return out


def _term_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def exact_divide(p: Poly, d: Poly) -> Poly:
    """Return q with p == q*d, or raise NotDivisible."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p._check(d)
    ld, lc = d.leading_term()
    rem = dict(p.terms)
    quot = {}
    while rem:
        le = max(rem, key=grevlex_key)
        if not _term_divides(ld, le):
            raise NotDivisible(f"{render(d)} does not divide {render(p)}")
        qe = tuple(a - b for a, b in zip(le, ld))
        qc = rem[le] / lc
        quot[qe] = qc
        for e, c in d.terms.items():
            m = tuple(a + b for a, b in zip(e, qe))
            v = rem.get(m, 0) - qc * c
            if v:
                rem[m] = v
            else:
                del rem[m]
    return Poly._raw(p.nvars, quot)


def divides(d: Poly, p: Poly) -> bool:
    try:
        exact_divide(p, d)
    except NotDivisible:
        return False
    return True


def linear_coords(alpha: Poly):
    """Coefficients of a homogeneous linear form; raises if alpha is not one."""
    coords = [Fraction(0)] * alpha.nvars
    for e, c in alpha.terms.items():
        if sum(e) != 1:
            raise ValueError(f"{render(alpha)} is not a homogeneous linear form")
        coords[e.index(1)] = c
    if not any(coords):
        raise ValueError("zero linear form")
    return coords


def reduce_mod_linear(p: Poly, alpha: Poly) -> Poly:
    """Canonical representative of p modulo the linear form alpha.

    The highest-index variable occurring in alpha is eliminated by solving
    alpha = 0 for it.
    """
    coords = linear_coords(alpha)
    v = max(i for i, c in enumerate(coords) if c)
    images = []
    for i in range(p.nvars):
        if i == v:
            images.append(
                Poly.linear([-c / coords[v] if k != v else 0 for k, c in enumerate(coords)])
            )
        else:
            images.append(Poly.var(p.nvars, i + 1))
    return p.substitute(images)


# ---------------------------------------------------------------------------
# rendering and serialization

def _fmt_coef(c: Fraction):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(p: Poly, names=None) -> str:
    if names is None:
        names = [f"a{i + 1}" for i in range(p.nvars)]
    if p.is_zero():
        return "0"
    out = []
    for e, c in p.sorted_terms():
        mono = "*".join(
            names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k
        )
        mag = abs(c)
        if not mono:
            body = _fmt_coef(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coef(mag)}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


def poly_to_json(p: Poly) -> dict:
    return {
        "terms": [
            {"coef": [c.numerator, c.denominator], "exp": list(e)}
            for e, c in p.sorted_terms()
        ]
    }


def poly_from_json(obj: dict, nvars: int) -> Poly:
    terms = {}
    for t in obj["terms"]:
        num, den = t["coef"]
        exp = tuple(t["exp"])
        if exp in terms:
            raise ValueError(f"duplicate exponent {exp} in serialized polynomial")
        terms[exp] = Fraction(num, den)
    return Poly(nvars, terms)


# ---------------------------------------------------------------------------
# matrices of polynomials (plain row lists)

def mat_zero(nvars, rows, cols):
    z = Poly(nvars)
    return [[z] * cols for _ in range(rows)]


def mat_identity(nvars, n, scalar=None):
    m = mat_zero(nvars, n, n)
    one = Poly.const(nvars, 1) if scalar is None else scalar
    for i in range(n):
        m[i][i] = one
    return m


def mat_mul(a, b):
    n, k = len(a), len(b)
    cols = len(b[0]) if b else 0
    if a and len(a[0]) != k:
        raise ValueError("shape mismatch")
    nvars = (a[0][0] if a and a[0] else b[0][0]).nvars
    out = []
    for i in range(n):
        row = []
        for j in range(cols):
            acc = Poly(nvars)
            for t in range(k):
                x, y = a[i][t], b[t][j]
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def mat_map(f, m):
    return [[f(x) for x in row] for row in m]


def column(m, j):
    return [row[j] for row in m]


def block(tl, tr, bl, br):
    return [r1 + r2 for r1, r2 in zip(tl, tr)] + [r1 + r2 for r1, r2 in zip(bl, br)]


def determinant(m) -> Poly:
    """Fraction-free (Bareiss) determinant of a square polynomial matrix."""
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    nvars = m[0][0].nvars
    a = [list(row) for row in m]
    sign = 1
    prev = Poly.const(nvars, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Poly(nvars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def monomials_upto(nvars: int, k: int) -> Iterable[tuple]:
    """All exponent vectors of total degree <= k, in increasing grevlex order."""
    def rec(i, left):
        if i == nvars - 1:
            for e in range(left + 1):
                yield (e,)
            return
        for e in range(left + 1):
            for rest in rec(i + 1, left - e):
                yield (e,) + rest

    if nvars == 0:
        return [()]
    return sorted(rec(0, k), key=grevlex_key)


# ---------------------------------------------------------------------------
# Weyl group action and divided differences

_REFLECTION_IMAGES = {}


def _reflection_images(j, cm):
    key = (j, cm)
    if key not in _REFLECTION_IMAGES:
        from .rootsys import reflect, simple_root

        r = len(cm)
        _REFLECTION_IMAGES[key] = [Poly.linear(reflect(j, simple_root(i, r), cm)) for i in range(1, r + 1)]
    return _REFLECTION_IMAGES[key]


def weyl_act(j: int, p: Poly, cm) -> Poly:
    """Ring automorphism of S(t*) extending the simple reflection s_j."""
    if not 1 <= j <= len(cm):
        raise IndexError(f"simple root index {j} out of range 1..{len(cm)}")
    if p.is_constant():
        return p
    return p.substitute(_reflection_images(j, cm))


def divided_difference(j: int, p: Poly, cm) -> Poly:
    """(s_j p - p) / alpha_j; exact for every polynomial."""
    alpha = Poly.var(p.nvars, j)
    try:
        return exact_divide(weyl_act(j, p, cm) - p, alpha)
    except NotDivisible as exc:  # pragma: no cover - would mean broken arithmetic
        raise AssertionError(f"divided difference not exact for {render(p)}") from exc


# ---------------------------------------------------------------------------
# fractions with products of linear forms as denominators

def normalize_linear(alpha: Poly):
    """Split a linear form as c * ell with ell's lowest-index coefficient equal to 1."""
    coords = linear_coords(alpha)
    lead = next(c for c in coords if c)
    return lead, Poly.linear([c / lead for c in coords])


class RationalFunction:
    """num / (product of den), with den a sorted tuple of normalized linear forms.

    Canonical: no denominator factor divides the numerator, so equal
    functions have identical representations.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Iterable[Poly] = ()):
        scale = Fraction(1)
        factors = []
        for d in den:
            c, ell = normalize_linear(d)
            scale *= c
            factors.append(ell)
        num = num * (1 / scale) if scale != 1 else num
        if num.is_zero():
            factors = []
        kept = []
        for ell in factors:
            try:
                num = exact_divide(num, ell)
            except NotDivisible:
                kept.append(ell)
        kept.sort(key=lambda q: tuple(-c for c in linear_coords(q)))
        self.num = num
        self.den = tuple(kept)

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p)

    @property
    def nvars(self):
        return self.num.nvars

    def is_polynomial(self):
        return not self.den

    def as_polynomial(self):
        """The polynomial value, or None if a denominator survives."""
        return self.num if not self.den else None

    def is_zero(self):
        return self.num.is_zero()

    def denominator(self) -> Poly:
        out = Poly.const(self.nvars, 1)
        for d in self.den:
            out = out * d
        return out

    @staticmethod
    def _lcm(d1, d2):
        rest = list(d2)
        out = []
        for d in d1:
            out.append(d)
            if d in rest:
                rest.remove(d)
        return out + rest

    @staticmethod
    def _missing(full, part):
        rest = list(full)
        for d in part:
            rest.remove(d)
        return rest

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other)
        return RationalFunction(Poly.const(self.nvars, other))

    def __add__(self, other):
        other = self._lift(other)
        den = self._lcm(self.den, other.den)
        n1 = self.num
        for d in self._missing(den, self.den):
            n1 = n1 * d
        n2 = other.num
        for d in self._missing(den, other.den):
            n2 = n2 * d
        return RationalFunction(n1 + n2, den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return RationalFunction(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def divide_by_linear(self, *forms: Poly):
        return RationalFunction(self.num, self.den + tuple(forms))

    def weyl_act(self, j, cm):
        return RationalFunction(weyl_act(j, self.num, cm), [weyl_act(j, d, cm) for d in self.den])

    def divided_difference(self, j, cm):
        return (self.weyl_act(j, cm) - self).divide_by_linear(Poly.var(self.nvars, j))

    def __eq__(self, other):
        if isinstance(other, (Poly, int, Fraction)):
            other = self._lift(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if not self.den:
            return render(self.num)
        den = "*".join(f"({render(d)})" if len(d.terms) > 1 else render(d) for d in self.den)
        return f"({render(self.num)})/({den})"

    __repr__ = __str__


def ratfun_to_json(f: RationalFunction) -> dict:
    return {"num": poly_to_json(f.num), "den": [poly_to_json(d) for d in f.den]}


def ratfun_from_json(obj: dict, nvars: int) -> RationalFunction:
    return RationalFunction(
        poly_from_json(obj["num"], nvars), [poly_from_json(d, nvars) for d in obj["den"]]
    )
