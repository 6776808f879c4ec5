"""Mumford representation and Cantor's algorithm on odd-degree models.

A divisor class is a pair (u, v): u monic, deg u <= g, deg v < deg u,
u | v^2 - f, representing sum (x_i, v(x_i)) - (deg u) * infinity.  The same
kernels serve Q (p=None, Fraction coefficients) and F_p (int coefficients);
polynomials are plain low-to-high lists inside the kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import ClassforgeError
from .curve import HyperCurve

QQ = Fraction


# -- field-generic list kernels (p None -> Fraction field) ----------------------

def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _add(a, b, p):
    n = max(len(a), len(b))
    c = [QQ(0) if p is None else 0] * n
    for i, v in enumerate(a):
        c[i] = v
    if p is None:
        for i, v in enumerate(b):
            c[i] = c[i] + v
    else:
        for i, v in enumerate(b):
            c[i] = (c[i] + v) % p
    return _trim(c)


def _sub(a, b, p):
    if p is None:
        return _add(a, [-v for v in b], p)
    return _add(a, [(-v) % p for v in b], p)


def _mul(a, b, p):
    if not a or not b:
        return []
    c = [QQ(0) if p is None else 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                c[i + j] += x * y
    if p is not None:
        c = [v % p for v in c]
    return _trim(c)


def _inv(x, p):
    return 1 / x if p is None else pow(x, p - 2, p)


def _divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    r = list(a)
    db = len(b) - 1
    ib = _inv(b[-1], p)
    q = [QQ(0) if p is None else 0] * max(0, len(r) - db)
    while len(r) - 1 >= db and r:
        c = r[-1] * ib
        if p is not None:
            c %= p
        k = len(r) - 1 - db
        q[k] = c
        for i, v in enumerate(b):
            r[k + i] = (r[k + i] - c * v) % p if p is not None else r[k + i] - c * v
        _trim(r)
        if not r:
            break
    return _trim(q), r


def _mod(a, b, p):
    return _divmod(a, b, p)[1]


def _monic(a, p):
    if not a:
        return a
    ia = _inv(a[-1], p)
    if p is None:
        return [v * ia for v in a]
    return [v * ia % p for v in a]


def _xgcd_poly(a, b, p):
    r0, r1 = list(a), list(b)
    s0, s1 = [QQ(1) if p is None else 1], []
    t0, t1 = [], [QQ(1) if p is None else 1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    if r0:
        ia = _inv(r0[-1], p)
        if p is None:
            r0, s0, t0 = [v * ia for v in r0], [v * ia for v in s0], [v * ia for v in t0]
        else:
            r0 = [v * ia % p for v in r0]
            s0 = [v * ia % p for v in s0]
            t0 = [v * ia % p for v in t0]
    return r0, s0, t0


# -- divisors -------------------------------------------------------------------

@dataclass(frozen=True)
class MumfordDivisor:
    u: tuple
    v: tuple

    @property
    def weight(self) -> int:
        return len(self.u) - 1


def identity_divisor(C: HyperCurve) -> MumfordDivisor:
    one = QQ(1) if C.p is None else 1
    return MumfordDivisor((one,), ())


def mumford(C: HyperCurve, u, v) -> MumfordDivisor:
    """Validated semi-reduced divisor (u, v) on C; reduces if deg u > g."""
    p = C.p
    ul = _monic(_trim(list(u)), p)
    vl = _mod(_trim(list(v)), ul, p)
    D = MumfordDivisor(tuple(ul), tuple(vl))
    _validate(C, D)
    if D.weight > C.genus:
        D = _reduce(C, list(D.u), list(D.v))
    return D


def _validate(C: HyperCurve, D: MumfordDivisor) -> None:
    p = C.p
    diff = _sub(_mul(list(D.v), list(D.v), p), list(C.f), p)
    if _mod(diff, list(D.u), p):
        raise ClassforgeError("invalid Mumford pair: u does not divide v^2 - f")


def divisor_of_point(C: HyperCurve, x, y) -> MumfordDivisor:
    """Class of (x, y) - infinity."""
    p = C.p
    if p is None:
        x, y = QQ(x), QQ(y)
    else:
        x, y = int(x) % p, int(y) % p
    return mumford(C, [-x if p is None else (-x) % p, QQ(1) if p is None else 1], [y])


def cantor_neg(C: HyperCurve, D: MumfordDivisor) -> MumfordDivisor:
    p = C.p
    if p is None:
        return MumfordDivisor(D.u, tuple(-v for v in D.v))
    return MumfordDivisor(D.u, tuple((-v) % p for v in D.v))


def cantor_add(C: HyperCurve, D1: MumfordDivisor, D2: MumfordDivisor) -> MumfordDivisor:
    """Cantor composition + reduction on the odd model."""
    p = C.p
    f = list(C.f)
    u1, v1 = list(D1.u), list(D1.v)
    u2, v2 = list(D2.u), list(D2.v)
    d1, e1, e2 = _xgcd_poly(u1, u2, p)
    vsum = _add(v1, v2, p)
    d, c1, c2 = _xgcd_poly(d1, vsum, p)
    # d = s1 u1 + s2 u2 + s3 (v1+v2)
    s1 = _mul(c1, e1, p)
    s2 = _mul(c1, e2, p)
    s3 = c2
    u, ru = _divmod(_mul(u1, u2, p), _mul(d, d, p), p)
    num = _add(
        _add(_mul(_mul(s1, u1, p), v2, p), _mul(_mul(s2, u2, p), v1, p), p),
        _mul(s3, _add(_mul(v1, v2, p), f, p), p),
        p,
    )
    q, rv = _divmod(num, d, p)
    if ru or rv:
        raise ClassforgeError("Cantor composition: inexact division")
    v = _mod(q, u, p)
    return _reduce(C, u, v)


def _reduce(C: HyperCurve, u, v) -> MumfordDivisor:
    p = C.p
    f = list(C.f)
    g = C.genus
    while len(u) - 1 > g:
        u2 = _divmod(_sub(f, _mul(v, v, p), p), u, p)[0]
        u2 = _monic(u2, p)
        v2 = _mod([-c if p is None else (-c) % p for c in v], u2, p)
        u, v = u2, v2
    return MumfordDivisor(tuple(_monic(u, p)), tuple(v))


def scalar_mul(C: HyperCurve, n: int, D: MumfordDivisor) -> MumfordDivisor:
    if n < 0:
        return scalar_mul(C, -n, cantor_neg(C, D))
    acc = identity_divisor(C)
    base = D
    while n:
        if n & 1:
            acc = cantor_add(C, acc, base)
        base = cantor_add(C, base, base)
        n >>= 1
    return acc


def is_identity(D: MumfordDivisor) -> bool:
    return D.weight == 0


def divisor_key(D: MumfordDivisor):
    """Hashable canonical key (u, v are already canonical)."""
    return (D.u, D.v)
