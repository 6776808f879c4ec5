"""The 3-rank constructions: explicit degree-24 form, identities, and
certificates for class 3-ranks and Jacobian 3-torsion.

Everything is anchored to the printed data: the parametrization
x = 18s^4, y = 3s(t^3 - 6s^3), z = t^4, w = t(18s^3 - t^3), the identity
2(x^3 + y^3) = z^3 + w^3, the three half-sum factorizations, and the binary
form F(s,t) = f(x(s,t), y(s,t), z(s,t)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..errors import BudgetExceeded, CertificateError, FactorizationIncomplete
from ..exactmath.fppoly import pderiv, pgcd, roots_fp, trim
from ..exactmath.multipoly import MPoly
from ..jactor.certify import TorsionCertificate, certify_torsion_rank
from ..jactor.functions import function_divisor_from_even_model
from ..quadclass.certify import RankCertificate, certify_m_rank, narrow_torsion_class

QQ = Fraction

# printed coefficients of F(s,t), exponents of t descending by 3
F_PRINTED = [
    (24, 1),
    (21, -54),
    (18, 1701),
    (15, -32076),
    (12, 393660),
    (9, -3464208),
    (6, 19840464),
    (3, -68024448),
    (0, 136048896),
]


def _svars():
    s = MPoly.var(0, 2)
    t = MPoly.var(1, 2)
    return s, t


def craig_parametrization() -> tuple[MPoly, MPoly, MPoly, MPoly]:
    """x, y, z, w as polynomials in (s, t)."""
    s, t = _svars()
    x = 18 * s**4
    y = 3 * s * (t**3 - 6 * s**3)
    z = t**4
    w = t * (18 * s**3 - t**3)
    return x, y, z, w


def ternary_form(x: MPoly, y: MPoly, z: MPoly) -> MPoly:
    """x^6 + y^6 + z^6 - 2x^3y^3 - 2x^3z^3 - 2y^3z^3 (the m = 3 form)."""
    a, b, c = x**3, y**3, z**3
    return a**2 + b**2 + c**2 - 2 * a * b - 2 * a * c - 2 * b * c


def craig_F() -> MPoly:
    """F(s,t) exactly as printed (construction cross-checked in the
    identity checker)."""
    s, t = _svars()
    acc = MPoly({}, 2)
    for k, coef in F_PRINTED:
        acc = acc + coef * s ** (24 - k) * t**k
    return acc


def craig_identity_check() -> bool:
    """All printed identities, verified as exact polynomial identities:

    - F(s,t) = f(x(s,t), y(s,t), z(s,t)) with the printed coefficients;
    - 2(x^3 + y^3) = z^3 + w^3 under the parametrization;
    - the three half-sum factorizations (via their squared forms);
    - the ternary square identity in x^m, y^m, z^m.
    """
    x, y, z, w = craig_parametrization()
    F = ternary_form(x, y, z)
    if F != craig_F():
        return False
    if not (2 * (x**3 + y**3) - (z**3 + w**3)).is_zero():
        return False
    # factorizations: A_i^2 - F = 4 * (products), on the surface v^2 = F
    a1 = x**3 + y**3 - z**3
    a2 = x**3 - y**3 + z**3
    a3 = x**3 - y**3 + w**3
    if not (a1**2 - F - 4 * x**3 * y**3).is_zero():
        return False
    if not (a2**2 - F - 4 * x**3 * z**3).is_zero():
        return False
    if not (a3**2 - F - 4 * x**3 * w**3).is_zero():
        return False
    # ternary square identity in A = x^m, B = y^m, C = z^m (all m at once)
    A, B, C = (MPoly.var(i, 3) for i in range(3))
    lhs = (A + B - C) ** 2 - 4 * A * B
    rhs = A**2 + B**2 + C**2 - 2 * A * B - 2 * A * C - 2 * B * C
    return (lhs - rhs).is_zero()


def craig_T(s: int, t: int) -> bool:
    """Membership in T: (3s,t) = 1, s even, (s + 2^i t, 7) = 1 for i=0,1,2."""
    if gcd(3 * s, t) != 1:
        return False
    if s % 2:
        return False
    return all((s + (1 << i) * t) % 7 != 0 for i in range(3))


def craig_point_data(s: int, t: int):
    """(F, [(xbase, A)] for the three certificate classes) at (s, t)."""
    x, y, z, w = (P.evaluate([s, t]) for P in craig_parametrization())
    x, y, z, w = int(x), int(y), int(z), int(w)
    F = int(ternary_form(*(MPoly.constant(v, 2) for v in (x, y, z))).evaluate([0, 0]))
    data = [
        (x * y, x**3 + y**3 - z**3),
        (x * z, x**3 - y**3 + z**3),
        (x * w, x**3 - y**3 + w**3),
    ]
    return F, data


@dataclass
class CraigClassResult:
    s: int
    t: int
    F: int
    certificate: RankCertificate | None
    note: str = ""


def craig_class_certificate(
    s: int, t: int, *, want_rank: int | None = None, **factor_kw
) -> CraigClassResult:
    """Class 3-rank certificate at (s, t) in T: rank 3 target for F < 0,
    rank 2 for F > 0 (narrow classes, m = 3 odd)."""
    if not craig_T(s, t):
        return CraigClassResult(s, t, 0, None, "not in T")
    F, data = craig_point_data(s, t)
    if F == 0:
        return CraigClassResult(s, t, 0, None, "degenerate F = 0")
    target = want_rank if want_rank is not None else (3 if F < 0 else 2)
    classes = []
    try:
        for xbase, A in data:
            classes.append(narrow_torsion_class(xbase, A, F, 3, **factor_kw).form)
    except (CertificateError, FactorizationIncomplete, BudgetExceeded) as e:
        return CraigClassResult(s, t, F, None, f"class construction: {e}")
    try:
        cert = certify_m_rank(classes, 3)
    except (BudgetExceeded, CertificateError) as e:
        return CraigClassResult(s, t, F, None, f"certification: {e}")
    note = "" if cert.rank >= target else f"rank {cert.rank} < target {target}"
    return CraigClassResult(s, t, F, cert, note)


def scan_T(limit: int, sign: int, count: int) -> list[tuple[int, int, int]]:
    """(|F|, s, t) for the `count` smallest |F| with sign(F) = sign in T.

    F < 0 happens only in a narrow window t/s near 2, so t ranges to ~2.5x
    the s limit; (s,t) and (-s,-t) give the same value of F (degree 24)."""
    found = []
    tlim = (5 * limit) // 2 + 2
    for s in range(2, limit + 1, 2):
        for t in range(-tlim, tlim + 1):
            if t == 0:
                continue
            for (ss, tt) in ((s, t), (-s, t)):
                if not craig_T(ss, tt):
                    continue
                F, _ = craig_point_data(ss, tt)
                if F and (F > 0) == (sign > 0):
                    found.append((abs(F), ss, tt))
    found.sort()
    return found[:count]


# -- Jacobian 3-torsion on v^2 = F(1, t) ----------------------------------------

def craig_curve_poly() -> list[int]:
    """F(1, t) as an integer polynomial in t (degree 24)."""
    F = craig_F()
    c = [0] * 25
    for (i, j), v in F.terms.items():
        c[j] += int(v) * 1**i
    return c


def craig_A_polys() -> list[list[int]]:
    """A_i(t) at s = 1 for the three functions (degree <= 12)."""
    x, y, z, w = craig_parametrization()
    out = []
    for P in (x**3 + y**3 - z**3, x**3 - y**3 + z**3, x**3 - y**3 + w**3):
        c = [0] * 13
        for (i, j), v in P.terms.items():
            c[j] += int(v)
        out.append(trim(c))
    return out


def craig_good_primes(count: int = 3, start: int = 5) -> list[tuple[int, int]]:
    """Smallest odd good-reduction primes where F(1,t) has a root and all
    three norms keep multiplicities divisible by 3; returns (p, root)."""
    from ..exactmath.integers import primes_up_to

    fpoly = craig_curve_poly()
    out = []
    for p in primes_up_to(500):
        if p < start or len(out) >= count:
            continue
        fl = [v % p for v in fpoly]
        if len(fl) < 25 or not fl[-1]:
            continue
        if len(pgcd(fl, pderiv(fl, p), p)) != 1:
            continue
        rts = roots_fp(fl, p)
        if not rts:
            continue
        root = rts[0][0]
        try:
            craig_torsion_certificate(p, root)
        except (CertificateError, BudgetExceeded):
            continue
        out.append((p, root))
    return out


def craig_torsion_certificate(p: int, root: int) -> TorsionCertificate:
    """Rank-3 3-torsion certificate for D1, D2, D3 on v^2 = F(1,t) mod p."""
    fpoly = craig_curve_poly()
    divisors = []
    C = None
    for A in craig_A_polys():
        C, _, D = function_divisor_from_even_model(fpoly, A, root, 3, p)
        divisors.append(D)
    cert = certify_torsion_rank(C, divisors, 3)
    if cert.rank < 3:
        raise CertificateError(f"torsion rank {cert.rank} < 3 at p = {p}")
    return cert
