"""Divisors of functions G = a(x) + b(x) y via norm factorization.

On the odd model the finite zero divisor of G is read off from the norm
N = a^2 - b^2 f: a root r with b(r) != 0 supports the point (r, -a(r)/b(r)).
When every norm multiplicity is divisible by m, div(G) = m * D for an exact
divisor D whose class this module returns.
"""

from __future__ import annotations

from ..errors import CertificateError, ClassforgeError
from ..exactmath.fppoly import (
    factor_fp,
    padd,
    pgcd,
    pmod,
    pmul,
    pneg,
    psub,
    pxgcd,
    trim,
)
from .curve import HyperCurve
from .mumford import MumfordDivisor, is_identity, mumford, scalar_mul


def divisor_of_function(
    C: HyperCurve, a, b, m: int
) -> MumfordDivisor:
    """Reduced class D with m*D = div(a + b*y) on C over F_p.

    Every multiplicity of the norm a^2 - b^2 f must be divisible by m
    (CertificateError otherwise: the defining identity fails mod p and the
    caller should pick another prime).  The postcondition m*[D] = 0 is
    verified by scalar multiplication before returning.
    """
    p = C.p
    if p is None:
        raise ClassforgeError("divisor_of_function works over F_p")
    a = trim([int(v) % p for v in a])
    b = trim([int(v) % p for v in b])
    if not a and not b:
        raise ClassforgeError("zero function")
    if len(pgcd(a, b, p)) > 1:
        raise ClassforgeError("a and b must be coprime (factor the gcd out)")
    f = list(C.f)
    norm = psub(pmul(a, a, p), pmul(pmul(b, b, p), f, p), p)
    if not norm:
        raise ClassforgeError("norm vanishes identically: G is not on the curve")
    u_parts: list[tuple[list[int], int]] = []
    for q, e in factor_fp(norm, p):
        if e % m:
            raise CertificateError(
                f"norm multiplicity {e} of factor {q} not divisible by {m}"
            )
        u_parts.append((q, e // m))
    # assemble u = prod q^(e/m) and v = -a/b mod each factor power, by CRT
    u = [1]
    v = [0]
    for q, e in u_parts:
        qe = [1]
        for _ in range(e):
            qe = pmul(qe, q, p)
        if len(pgcd(b, q, p)) > 1:
            # b = 0 on this support: a must vanish too, excluded by gcd(a,b)=1
            raise CertificateError("b vanishes on a norm factor (bad prime)")
        vq = _neg_a_over_b_mod(a, b, qe, p)
        v = _crt_poly(v, u, vq, qe, p)
        u = pmul(u, qe, p)
    D = mumford(C, u, v)
    if not is_identity(scalar_mul(C, m, D)):
        raise CertificateError("postcondition failed: m*D is not trivial")
    return D


def _neg_a_over_b_mod(a, b, mod, p):
    """-a * b^(-1) mod `mod` (b invertible there)."""
    g, s, _ = pxgcd(b, mod, p)
    if len(g) != 1:
        raise CertificateError("b not invertible modulo a norm factor")
    return pmod(pmul(pneg(a, p), s, p), mod, p)


def _crt_poly(v1, m1, v2, m2, p):
    """v = v1 mod m1, v = v2 mod m2 for coprime m1, m2."""
    if len(m1) == 1:
        return pmod(v2, m2, p)
    g, s, _ = pxgcd(m1, m2, p)
    if len(g) != 1:
        raise CertificateError("norm factors not coprime (bug)")
    # v = v1 + m1 * s * (v2 - v1) mod m1*m2   since m1*s = 1 mod m2
    diff = psub(v2, v1, p)
    corr = pmul(pmul(m1, s, p), diff, p)
    return pmod(padd(v1, corr, p), pmul(m1, m2, p), p)


def function_divisor_from_even_model(
    F_even, A_even, root: int, m: int, p: int
):
    """Transport G = A(t) + v on v^2 = F(t) (even degree 2g+2) to the odd
    model at the mod-p root `root`, and take its divisor class over m.

    With deg A <= g+1, the substitution t = root + 1/U, v = V/U^(g+1) turns
    G into (a(U) + V)/U^(g+1) with a(U) = U^(g+1) A(root + 1/U).  Dropping
    the U-power and constants only shifts div(G) by principal coordinate
    divisors, so the class of divisor_of_function(a', 1) is the transported
    class.  Returns (odd curve, point map, divisor class).
    """
    from .curve import move_root_to_infinity

    C_odd, pmap = move_root_to_infinity(F_even, root, p)
    g = C_odd.genus
    A = [int(v) % p for v in A_even]
    trim(A)
    if len(A) - 1 > g + 1:
        raise ClassforgeError("deg A exceeds g+1; transport formula invalid")
    # a(U) = U^(g+1) A(root + 1/U): pad, Taylor-shift, reverse
    shifted = _shift_fp_local(A + [0] * (g + 2 - len(A)), root, p)
    a = list(reversed(shifted))
    trim(a)
    # monicization (U, V) -> (X, Y) = (L U, L^g V) turns a(U) + V into
    # (a'(X) + L Y)/L^(g+1) with a'_i = a_i L^(g+1-i): note b becomes L
    L = int(pmap.sx) % p
    if L != 1:
        a = [a[i] * pow(L, g + 1 - i, p) % p for i in range(len(a))]
    D = divisor_of_function(C_odd, a, [L], m)
    return C_odd, pmap, D


def _shift_fp_local(f: list[int], r: int, p: int) -> list[int]:
    out = list(f)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] = (out[j] + r * out[j + 1]) % p
    return out
