"""Truncated power series over Q and m-th roots of series."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import qpoly

QQ = Fraction


@dataclass(frozen=True)
class PowerSeriesRat:
    """Power series mod x^order; coeffs has exactly `order` entries."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        c = [QQ(v) for v in self.coeffs[: self.order]]
        c += [QQ(0)] * (self.order - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    def __add__(self, other):
        k = min(self.order, other.order)
        return PowerSeriesRat(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), k
        )

    def __sub__(self, other):
        k = min(self.order, other.order)
        return PowerSeriesRat(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), k
        )

    def __mul__(self, other):
        k = min(self.order, other.order)
        c = [QQ(0)] * k
        for i, a in enumerate(self.coeffs[:k]):
            if a:
                for j, b in enumerate(other.coeffs[: k - i]):
                    c[i + j] += a * b
        return PowerSeriesRat(tuple(c), k)

    def pow(self, e: int) -> "PowerSeriesRat":
        r = PowerSeriesRat((QQ(1),), self.order)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def truncate(self, k: int) -> "PowerSeriesRat":
        return PowerSeriesRat(self.coeffs[:k], min(k, self.order))

    def to_poly(self):
        return qpoly.poly(self.coeffs)


def from_poly(f, order: int) -> PowerSeriesRat:
    return PowerSeriesRat(tuple(f[:order]), order)


def series_mth_root(g, m: int, k: int, branch) -> PowerSeriesRat:
    """Series h with h^m = g mod x^k and h(0) = branch.

    g is a polynomial (qpoly tuple) or series; requires branch^m = g(0) != 0.
    Coefficients are solved degree by degree: the x^n coefficient of h^m is
    m*branch^(m-1)*h_n plus terms in lower h-coefficients.
    """
    if k < 1:
        raise ValueError("truncation order must be >= 1")
    coeffs = g.coeffs if isinstance(g, PowerSeriesRat) else tuple(g)
    g0 = QQ(coeffs[0]) if coeffs else QQ(0)
    branch = QQ(branch)
    if g0 == 0:
        raise ValueError("series root needs g(0) != 0")
    if branch**m != g0:
        raise ValueError("branch^m != g(0)")
    gk = [QQ(coeffs[i]) if i < len(coeffs) else QQ(0) for i in range(k)]
    h = [branch]
    lead = m * branch ** (m - 1)
    for n in range(1, k):
        partial = from_poly(tuple(h), n + 1).pow(m)
        h.append((gk[n] - partial.coeffs[n]) / lead)
    return PowerSeriesRat(tuple(h), k)
