"""Dense univariate polynomials over Q.

A polynomial is a tuple of Fractions, low degree first, no trailing zeros
(the zero polynomial is the empty tuple).  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

QQ = Fraction

ZERO: tuple = ()
ONE = (QQ(1),)
X = (QQ(0), QQ(1))


def poly(coeffs) -> tuple:
    """Canonical polynomial from an iterable of ints/Fractions."""
    c = [QQ(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f) -> int:
    return len(f) - 1


def lc(f) -> Fraction:
    if not f:
        raise ValueError("zero polynomial has no leading coefficient")
    return f[-1]


def add(f, g):
    n = max(len(f), len(g))
    c = [QQ(0)] * n
    for i, v in enumerate(f):
        c[i] += v
    for i, v in enumerate(g):
        c[i] += v
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def neg(f):
    return tuple(-v for v in f)


def sub(f, g):
    return add(f, neg(g))


def mul(f, g):
    if not f or not g:
        return ZERO
    c = [QQ(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                c[i + j] += a * b
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def scale(f, s):
    s = QQ(s)
    if s == 0:
        return ZERO
    return tuple(v * s for v in f)


def shift(f, k: int):
    """Multiply by x^k."""
    if not f:
        return ZERO
    return (QQ(0),) * k + tuple(f)


def pow_(f, e: int):
    r = ONE
    b = f
    while e:
        if e & 1:
            r = mul(r, b)
        b = mul(b, b)
        e >>= 1
    return r


def divmod_(f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    q = [QQ(0)] * max(0, len(f) - len(g) + 1)
    dg, lg = len(g) - 1, g[-1]
    while len(r) - 1 >= dg and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dg:
            break
        c = r[-1] / lg
        k = len(r) - 1 - dg
        q[k] = c
        for i, v in enumerate(g):
            r[k + i] -= c * v
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    while q and q[-1] == 0:
        q.pop()
    return tuple(q), tuple(r)


def rem(f, g):
    return divmod_(f, g)[1]


def div_exact(f, g):
    q, r = divmod_(f, g)
    if r:
        raise ValueError("inexact polynomial division")
    return q


def monic(f):
    if not f:
        return f
    return scale(f, 1 / f[-1])


def deriv(f):
    return tuple(QQ(i) * v for i, v in enumerate(f) if i > 0)


def evaluate(f, x) -> Fraction:
    acc = QQ(0)
    for v in reversed(f):
        acc = acc * x + v
    return acc


def compose(f, g):
    """f(g(x))."""
    acc = ZERO
    for v in reversed(f):
        acc = add(mul(acc, g), poly([v]))
    return acc


def poly_gcd(f, g):
    """Monic gcd via a primitive PRS over Z (no coefficient blowup)."""
    if not f:
        return monic(g)
    if not g:
        return monic(f)
    a = _primitive_int(f)
    b = _primitive_int(g)
    while b:
        r, _ = _prem_int(a, b)
        a, b = b, _int_primitive_part(r)
    return monic(poly(a))


def _sign(v) -> int:
    return -1 if v < 0 else 1


def _primitive_int(f) -> tuple:
    """Clear denominators and content; integer tuple, positive content 1."""
    d = lcm(*[v.denominator for v in f]) if f else 1
    ints = [int(v * d) for v in f]
    c = 0
    for v in ints:
        c = gcd(c, abs(v))
    if c:
        ints = [v // c for v in ints]
    return tuple(ints)


def _int_primitive_part(f) -> tuple:
    c = 0
    for v in f:
        c = gcd(c, abs(v))
    if c:
        return tuple(v // c for v in f)
    return tuple(f)


def _prem_int(a, b):
    """Pseudo-remainder of integer polys: (r, t) with lc(b)^t * a = q*b + r."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    t = 0
    while len(a) - 1 >= db:
        la = a[-1]
        k = len(a) - 1 - db
        a = [v * lb for v in a]
        t += 1
        for i, v in enumerate(b):
            a[k + i] -= la * v
        a.pop()
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return tuple(a), t


def is_squarefree(f) -> bool:
    return degree(poly_gcd(f, deriv(f))) <= 0


def resultant(f, g) -> Fraction:
    """Sylvester resultant via a primitive PRS with tracked correction."""
    if not f or not g:
        raise ValueError("resultant of the zero polynomial")
    if degree(f) == 0:
        return f[0] ** degree(g) if g else QQ(1)
    if degree(g) == 0:
        return g[0] ** degree(f)
    # f = cf*F, g = sg*G with F, G primitive integer polys
    F = _primitive_int(f)
    G = _primitive_int(g)
    cf = f[-1] / F[-1]
    sg = g[-1] / G[-1]
    mult = cf ** degree(g) * sg ** degree(f)
    return mult * _resultant_int(F, G)


def _resultant_int(a, b) -> Fraction:
    """Resultant of integer polys via primitive PRS, exact correction factors."""
    mult = QQ(1)
    sign = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return sign * mult * QQ(b[0]) ** da
        if da < db:
            a, b = b, a
            if da % 2 and db % 2:
                sign = -sign
            continue
        r, t = _prem_int(a, b)
        if not r:
            return QQ(0)
        rp = _int_primitive_part(r)
        # prem: lb^t a = qb + r, r = c*rp, so a mod b = (c/lb^t) rp
        lb = QQ(b[-1])
        c = QQ(r[-1]) / QQ(rp[-1])
        dr = len(r) - 1
        # res(a,b) = (-1)^(da*db) lb^(da-dr) res(b, a mod b)
        #          = (-1)^(da*db) lb^(da-dr) (c/lb^t)^db res(b, rp)
        if da % 2 and db % 2:
            sign = -sign
        mult *= lb ** (da - dr) * (c / lb**t) ** db
        a, b = b, rp


def resultant_sylvester(f, g) -> Fraction:
    """Resultant by direct Sylvester-determinant (test oracle, small sizes)."""
    m, n = degree(f), degree(g)
    if m < 0 or n < 0:
        raise ValueError("resultant of the zero polynomial")
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    fr = list(reversed(f))
    gr = list(reversed(g))
    for i in range(n):
        rows.append([QQ(0)] * i + fr + [QQ(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([QQ(0)] * i + gr + [QQ(0)] * (size - n - 1 - i))
    det = QQ(1)
    for col in range(size):
        piv = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if piv is None:
            return QQ(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col]:
                factor = rows[r][col] * inv
                for cc in range(col, size):
                    rows[r][cc] -= factor * rows[col][cc]
    return det


def discriminant(f) -> Fraction:
    """disc(f) = (-1)^(d(d-1)/2) res(f, f') / lc(f)."""
    d = degree(f)
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    s = -1 if (d * (d - 1) // 2) % 2 else 1
    return s * resultant(f, deriv(f)) / f[-1]


# -- squarefree decomposition (Yun) ------------------------------------------

def squarefree_decomposition(f) -> list[tuple[tuple, int]]:
    """Yun's algorithm: [(g_i, i)] with f = lc * prod g_i^i, g_i squarefree."""
    if degree(f) < 1:
        return []
    w = monic(f)
    out = []
    g = poly_gcd(w, deriv(w))
    c = div_exact(w, g)
    d = sub(div_exact(deriv(w), g), deriv(c))
    i = 1
    while degree(c) > 0:
        p = poly_gcd(c, d)
        if degree(p) > 0:
            out.append((p, i))
        c2 = div_exact(c, p)
        d = sub(div_exact(d, p), deriv(c2))
        c = c2
        i += 1
    return out


def squarefree_radical_and_square(f) -> tuple[tuple, tuple]:
    """Write monic(f) = R * S^2 with R squarefree-after... returns (fsf, S).

    fsf collects each squarefree factor to the power (multiplicity mod 2),
    so f = lc * fsf * S^2 and fsf is squarefree.
    """
    fsf, s = ONE, ONE
    for g, i in squarefree_decomposition(f):
        if i % 2:
            fsf = mul(fsf, g)
        s = mul(s, pow_(g, i // 2))
    return fsf, s


# -- Sturm sequences ----------------------------------------------------------

def _sturm_chain(f):
    """Primitive-integer Sturm chain of a squarefree f (positive rescaling)."""
    chain = [_primitive_int(f)]
    d = deriv(f)
    if d:
        chain.append(_primitive_int(d))
    while len(chain) >= 2 and len(chain[-1]) > 1:
        r, t = _prem_int(chain[-2], chain[-1])
        if not r:
            break
        # prem multiplied by lc^t: undo the sign when that factor was negative
        if chain[-1][-1] < 0 and t % 2:
            r = tuple(-v for v in r)
        chain.append(_int_primitive_part(tuple(-v for v in r)))
    return chain


def _sign_at(f, x) -> int:
    """Sign of an integer poly at x in Q U {-inf, +inf}."""
    if x == "inf":
        return _sign(f[-1]) if f else 0
    if x == "-inf":
        s = _sign(f[-1]) if f else 0
        return s if (len(f) - 1) % 2 == 0 else -s
    acc = 0
    for v in reversed(f):
        acc = acc * x + v
    return 0 if acc == 0 else (1 if acc > 0 else -1)


def _variations(signs) -> int:
    v, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def sturm_real_root_count(f, interval=("-inf", "inf")) -> int:
    """Number of distinct real roots of squarefree f in the open interval.

    Endpoints may be Fractions/ints or the strings '-inf'/'inf'; endpoint
    roots are excluded (they are divided out exactly first).
    """
    f = poly(f)
    if degree(f) < 1:
        return 0
    if not is_squarefree(f):
        raise ValueError("sturm_real_root_count requires squarefree input")
    a, b = interval
    for endpoint in (a, b):
        if endpoint not in ("-inf", "inf") and evaluate(f, QQ(endpoint)) == 0:
            f = div_exact(f, (QQ(-endpoint), QQ(1)))
            return sturm_real_root_count(f, (a, b))
    chain = _sturm_chain(f)
    xa = a if a in ("-inf", "inf") else QQ(a)
    xb = b if b in ("-inf", "inf") else QQ(b)
    va = _variations([_sign_at(g, xa) for g in chain])
    vb = _variations([_sign_at(g, xb) for g in chain])
    return va - vb


# -- misc helpers --------------------------------------------------------------

def from_int_poly(coeffs):
    return poly(coeffs)


def denominator_lcm(f) -> int:
    return lcm(*[v.denominator for v in f]) if f else 1


def to_int_poly(f) -> tuple[tuple, int]:
    """(integer coefficient tuple, d) with f = ints/d."""
    d = denominator_lcm(f)
    return tuple(int(v * d) for v in f), d


def reversal(f, n: int | None = None):
    """x^n * f(1/x) for n >= deg f (default n = deg f)."""
    if n is None:
        n = degree(f)
    if n < degree(f):
        raise ValueError("reversal order below degree")
    c = [QQ(0)] * (n + 1)
    for i, v in enumerate(f):
        c[n - i] = v
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)
