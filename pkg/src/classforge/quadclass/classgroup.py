"""Class group structure at enumerable discriminants.

D < 0: class number by full reduced-form enumeration; elementary divisors by
torsion counting.  D > 0: the narrow class group via cycles of reduced
indefinite forms.  Large |D| is out of scope here on purpose - rank work at
large discriminants goes through certificates (see certify.py).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from ..errors import BudgetExceeded
from ..exactmath.integers import factor_int_checked
from . import forms
from .forms import QuadForm


@dataclass(frozen=True)
class ClassGroupStructure:
    """Elementary divisors d_1 | d_2 | ... | d_k (each > 1); h = prod d_i."""

    divisors: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.divisors, self.divisors[1:]):
            if b % a:
                raise ValueError("divisor chain broken")
        if any(d <= 1 for d in self.divisors):
            raise ValueError("elementary divisors must exceed 1")

    @property
    def h(self) -> int:
        n = 1
        for d in self.divisors:
            n *= d
        return n


def m_rank(G: ClassGroupStructure, m: int) -> int:
    """Largest r with (Z/m)^r inside G: min over p|m of #{i : p^ord_p(m) | d_i}."""
    if m <= 1:
        raise ValueError("m must exceed 1")
    fac = factor_int_checked(m)
    best = None
    for p, e in fac.factors.items():
        q = p**e
        r = sum(1 for d in G.divisors if d % q == 0)
        best = r if best is None else min(best, r)
    return best if best is not None else 0


def reduced_forms_neg(D: int) -> list[QuadForm]:
    """All reduced primitive positive definite forms of discriminant D < 0."""
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a negative discriminant")
    out = []
    amax = isqrt(-D // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == c or -b == a):
                continue
            if gcd(gcd(a, b), c) == 1:
                out.append(QuadForm(a, b, c))
    return out


def class_number_neg(D: int) -> int:
    return len(reduced_forms_neg(D))


def reduced_forms_pos(D: int) -> list[QuadForm]:
    """All reduced indefinite primitive forms of non-square discriminant D > 0."""
    if D <= 0 or D % 4 not in (0, 1):
        raise ValueError(f"{D} is not a positive discriminant")
    s = isqrt(D)
    out = []
    for b in range(1, s + 1):
        if (b - D) % 2:
            continue
        num = (D - b * b) // 4  # = -ac = |a||c| since reduced => ac < 0
        if num <= 0:
            continue
        for a in range(1, num + 1):
            if num % a:
                continue
            c = num // a
            for f in (QuadForm(a, b, -c), QuadForm(-a, b, c)):
                if forms.is_reduced_pos(f) and f.is_primitive():
                    out.append(f)
    return out


def narrow_class_representatives(D: int) -> list[QuadForm]:
    """One reduced form per narrow class (cycle partition)."""
    remaining = set(reduced_forms_pos(D))
    reps = []
    while remaining:
        f = min(remaining)
        cyc = forms.cycle_of(f)
        reps.append(f)
        remaining -= set(cyc)
    return reps


def _abelian_structure(elements, compose, identity, h: int) -> ClassGroupStructure:
    """Elementary divisors by m-torsion counting over the listed elements.

    rk over p^k is recovered from #((p^(k-1) G)[p]); elements must be
    canonical (hashable, equal iff same class).
    """
    if h == 1:
        return ClassGroupStructure(())
    fac = factor_int_checked(h)

    def pw(g, e):
        r = identity
        b = g
        while e:
            if e & 1:
                r = compose(r, b)
            b = compose(b, b)
            e >>= 1
        return r

    per_prime: dict[int, list[int]] = {}
    for p in fac.factors:
        # n_j = log_p #((p^j G)[p]); lambda partition from successive diffs
        ns = []
        j = 0
        while True:
            img = {pw(g, p**j) for g in elements}
            tor = sum(1 for x in img if pw(x, p) == identity)
            n_j = 0
            while p**n_j < tor:
                n_j += 1
            if p**n_j != tor:
                raise ArithmeticError("torsion count is not a p-power")
            ns.append(n_j)
            if n_j == 0:
                break
            j += 1
        lambdas = []
        for j in range(len(ns) - 1):
            lambdas += [j + 1] * (ns[j] - ns[j + 1])
        per_prime[p] = sorted(lambdas, reverse=True)

    width = max((len(v) for v in per_prime.values()), default=0)
    divisors = []
    for i in range(width):
        d = 1
        for p, lam in per_prime.items():
            if i < len(lam):
                d *= p ** lam[i]
        divisors.append(d)
    return ClassGroupStructure(tuple(sorted(divisors)))


def class_group(D: int, bound: int = 10**8) -> ClassGroupStructure:
    """Class group structure of the fundamental discriminant D.

    D < 0: ordinary class group by reduced-form enumeration.
    D > 0: narrow class group via reduction cycles.
    Raises BudgetExceeded past the enumeration bound - use certificates there.
    """
    if abs(D) > bound:
        raise BudgetExceeded(
            f"|D| = {abs(D)} exceeds the enumeration bound {bound}"
        )
    if D < 0:
        elems = reduced_forms_neg(D)
        ident = forms.reduce_neg(forms.principal_form(D))
        return _abelian_structure(elems, forms.compose, ident, len(elems))
    reps = narrow_class_representatives(D)
    # canonicalize classes by the minimum form of their cycle
    cache: dict[QuadForm, QuadForm] = {}

    def canon(f):
        r = forms.reduce_pos(f)
        if r not in cache:
            cyc = forms.cycle_of(r)
            mn = min(cyc)
            for g in cyc:
                cache[g] = mn
        return cache[r]

    elems = [canon(f) for f in reps]
    ident = canon(forms.principal_form(D))

    def comp(f, g):
        return canon(forms.compose(f, g))

    return _abelian_structure(elems, comp, ident, len(elems))
