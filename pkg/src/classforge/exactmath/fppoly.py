"""Dense univariate polynomials over F_p (p prime).

Low-level kernels work on plain lists of ints in [0, p); the PolyFp wrapper
carries the modulus for the public surface.  Coefficients low degree first,
no trailing zeros.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import ClassforgeError
from .integers import is_probable_prime


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a, b, p):
    n = max(len(a), len(b))
    c = [0] * n
    for i, v in enumerate(a):
        c[i] = v
    for i, v in enumerate(b):
        c[i] = (c[i] + v) % p
    return trim(c)


def psub(a, b, p):
    n = max(len(a), len(b))
    c = [0] * n
    for i, v in enumerate(a):
        c[i] = v
    for i, v in enumerate(b):
        c[i] = (c[i] - v) % p
    return trim(c)


def pneg(a, p):
    return [(-v) % p for v in a]


def pmul(a, b, p):
    if not a or not b:
        return []
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] += x * y
    return trim([v % p for v in c])


def pscale(a, s, p):
    s %= p
    if s == 0:
        return []
    return [v * s % p for v in a]


def pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(r) - db)
    while len(r) - 1 >= db and r:
        c = r[-1] * inv % p
        k = len(r) - 1 - db
        q[k] = c
        for i, v in enumerate(b):
            r[k + i] = (r[k + i] - c * v) % p
        trim(r)
        if not r:
            break
    return trim(q), r


def pmod(a, b, p):
    return pdivmod(a, b, p)[1]


def pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [v * inv % p for v in a]
    return a


def pxgcd(a, b, p):
    """(g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
        t0, t1 = t1, psub(t0, pmul(q, t1, p), p)
    if r0:
        inv = pow(r0[-1], p - 2, p)
        r0 = [v * inv % p for v in r0]
        s0 = [v * inv % p for v in s0]
        t0 = [v * inv % p for v in t0]
    return r0, s0, t0


def ppowmod(a, e, mod, p):
    r = [1]
    b = pmod(a, mod, p)
    while e:
        if e & 1:
            r = pmod(pmul(r, b, p), mod, p)
        b = pmod(pmul(b, b, p), mod, p)
        e >>= 1
    return r


def peval(a, x, p):
    acc = 0
    for v in reversed(a):
        acc = (acc * x + v) % p
    return acc


def pderiv(a, p):
    return trim([i * v % p for i, v in enumerate(a)][1:])


def pmonic(a, p):
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return [v * inv % p for v in a]


def is_irreducible(f, p) -> bool:
    """Rabin test: x^(p^d) = x mod f and gcd conditions at maximal subdegrees."""
    d = len(f) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    x = [0, 1]
    xp = ppowmod(x, p**d, f, p)
    if xp != pmod(x, f, p):
        return False
    for q in {q for q in _prime_divisors(d)}:
        xq = ppowmod(x, p ** (d // q), f, p)
        if len(pgcd(psub(xq, x, p), f, p)) > 1:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- factorization -------------------------------------------------------------

def _squarefree_split(f, p):
    """[(g, mult)] with f = lc * prod g^mult, each g monic squarefree."""
    out = []
    f = pmonic(f, p)

    def rec(g, base_mult):
        if len(g) <= 1:
            return
        d = pderiv(g, p)
        if not d:
            # g = h(x^p); over F_p the p-th root keeps the same coefficients
            h = trim([g[i] for i in range(0, len(g), p)])
            rec(h, base_mult * p)
            return
        w = pgcd(g, d, p)
        u = pdivmod(g, w, p)[0]   # product of squarefree part
        i = 1
        while len(u) > 1:
            y = pgcd(u, w, p)
            z = pdivmod(u, y, p)[0]
            if len(z) > 1:
                out.append((pmonic(z, p), base_mult * i))
            u = y
            w = pdivmod(w, y, p)[0]
            i += 1
        if len(w) > 1:
            rec(w, base_mult)

    rec(f, 1)
    return out


def _distinct_degree(f, p):
    """[(product of irreducibles of degree d, d)] for monic squarefree f."""
    out = []
    x = [0, 1]
    h = list(x)
    v = list(f)
    d = 0
    while len(v) - 1 >= 2 * (d + 1):
        d += 1
        h = ppowmod(h, p, v, p)
        g = pgcd(psub(h, x, p), v, p)
        if len(g) > 1:
            out.append((g, d))
            v = pdivmod(v, g, p)[0]
            h = pmod(h, v, p)
    if len(v) > 1:
        out.append((v, len(v) - 1))
    return out


def _equal_degree_split(f, d, p, rng):
    """Cantor-Zassenhaus split of monic squarefree f into degree-d factors."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        t = [rng.randrange(p) for _ in range(n)] + [1]
        if p == 2:
            # trace map over F_2
            u = pmod(t, f, 2)
            acc = list(u)
            for _ in range(d - 1):
                u = pmod(pmul(u, u, 2), f, 2)
                acc = padd(acc, u, 2)
            g = pgcd(acc, f, 2)
        else:
            e = (p**d - 1) // 2
            g = pgcd(psub(ppowmod(t, e, f, p), [1], p), f, p)
        if 1 < len(g) < len(f):
            h = pdivmod(f, g, p)[0]
            return _equal_degree_split(g, d, p, rng) + _equal_degree_split(
                h, d, p, rng
            )


def factor_fp(f, p) -> list[tuple[list[int], int]]:
    """Complete factorization over F_p: [(monic irreducible, multiplicity)].

    Deterministic: the equal-degree splitting rng is seeded from (p, f).
    The product of factors times lc(f) reproduces f.
    """
    if not is_probable_prime(p):
        raise ClassforgeError(f"modulus {p} is not prime")
    f = [v % p for v in f]
    trim(f)
    if not f:
        raise ClassforgeError("factor_fp of the zero polynomial")
    if len(f) == 1:
        return []
    rng = random.Random((p, tuple(f)).__repr__())
    out = []
    for g, mult in _squarefree_split(f, p):
        for h, d in _distinct_degree(g, p):
            for irr in _equal_degree_split(h, d, p, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def roots_fp(f, p) -> list[tuple[int, int]]:
    """[(root, multiplicity)] of f over F_p."""
    return [((-g[0]) % p, m) for g, m in factor_fp(f, p) if len(g) == 2]


@dataclass(frozen=True)
class PolyFp:
    """Immutable wrapper pairing a coefficient tuple with its prime modulus."""

    coeffs: tuple
    p: int

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", tuple(trim([v % self.p for v in self.coeffs]))
        )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        return PolyFp(padd(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def __sub__(self, other):
        return PolyFp(psub(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def __mul__(self, other):
        return PolyFp(pmul(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def __mod__(self, other):
        return PolyFp(pmod(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def gcd(self, other) -> "PolyFp":
        return PolyFp(pgcd(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def factor(self):
        return [
            (PolyFp(g, self.p), m) for g, m in factor_fp(list(self.coeffs), self.p)
        ]

    def __call__(self, x: int) -> int:
        return peval(list(self.coeffs), x, self.p)
