"""Sparse multivariate polynomials over Q (exponent-tuple keyed dicts).

Used for the explicit polynomial identities: everything here is small and
sparse (the largest object is a degree-24 binary form with 9 terms), so a
dict of exponent tuples -> Fraction is plenty.  No explicit zero entries.
"""

from __future__ import annotations

from fractions import Fraction

QQ = Fraction


class MPoly:
    """Immutable sparse polynomial in `nvars` variables."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: dict, nvars: int):
        clean = {}
        for e, c in terms.items():
            c = QQ(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean
        self.nvars = nvars

    @classmethod
    def constant(cls, c, nvars: int) -> "MPoly":
        return cls({(0,) * nvars: QQ(c)}, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): QQ(1)}, nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e, QQ(0)) + c
            if v:
                t[e] = v
            elif e in t:
                del t[e]
        return MPoly(t, self.nvars)

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, QQ(0)) + c1 * c2
        return MPoly(t, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = MPoly.constant(1, self.nvars)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MPoly.constant(other, self.nvars)

    def evaluate(self, values) -> Fraction:
        """Full evaluation at a point (one value per variable)."""
        acc = QQ(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                if k:
                    v *= QQ(x) ** k
            acc += v
        return acc

    def substitute(self, polys: list["MPoly"]) -> "MPoly":
        """Substitute a polynomial for every variable (composition)."""
        nv = polys[0].nvars
        acc = MPoly({}, nv)
        for e, c in self.terms.items():
            term = MPoly.constant(c, nv)
            for q, k in zip(polys, e):
                if k:
                    term = term * q**k
            acc = acc + term
        return acc

    def coefficient(self, expo) -> Fraction:
        return self.terms.get(tuple(expo), QQ(0))

    def to_univariate(self, var: int = 0) -> tuple:
        """Dense coefficient tuple in the given variable (others must be absent)."""
        deg = 0
        for e in self.terms:
            if any(k and i != var for i, k in enumerate(e)):
                raise ValueError("polynomial is not univariate in that variable")
            deg = max(deg, e[var])
        c = [QQ(0)] * (deg + 1)
        for e, coef in self.terms.items():
            c[e[var]] = coef
        while c and c[-1] == 0:
            c.pop()
        return tuple(c)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for e in sorted(self.terms, reverse=True):
            bits.append(f"{self.terms[e]}*x^{e}")
        return "MPoly(" + " + ".join(bits) + ")"


def from_univariate(f, var: int, nvars: int) -> MPoly:
    t = {}
    for i, c in enumerate(f):
        if c:
            e = [0] * nvars
            e[var] = i
            t[tuple(e)] = QQ(c)
    return MPoly(t, nvars)
