"""Hyperelliptic curves y^2 = f(x) in odd-degree monic form.

Arithmetic lives on the odd model (single rational point at infinity makes
Mumford reduction canonical).  Even-degree input has to come through
move_root_to_infinity.  Curves are either over Q (exact Fractions) or over
a prime field F_p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import BadReduction, ClassforgeError, FactorizationIncomplete
from ..exactmath import qpoly
from ..exactmath.fppoly import pgcd, trim
from ..exactmath.integers import factor_int_checked

QQ = Fraction


@dataclass(frozen=True)
class PointMap:
    """Affine coordinate change (x, y) -> (sx*x + tx, sy*y), then optional
    inversion u = 1/(x - r), v = y/(x - r)^(g+1) when `invert_at` is set."""

    sx: Fraction = QQ(1)
    tx: Fraction = QQ(0)
    sy: Fraction = QQ(1)
    invert_at: Fraction | None = None
    genus: int = 0

    def __call__(self, x, y):
        x, y = QQ(x), QQ(y)
        if self.invert_at is not None:
            dx = x - self.invert_at
            if dx == 0:
                raise ZeroDivisionError("point maps to infinity")
            x, y = 1 / dx, y / dx ** (self.genus + 1)
        return (self.sx * x + self.tx, self.sy * y)

    def apply_fp(self, x: int, y: int, p: int) -> tuple[int, int]:
        """Apply the map to a mod-p point (all map data must be p-integral)."""

        def frac_mod(q):
            if q.denominator % p == 0:
                raise ZeroDivisionError("map denominator vanishes mod p")
            return q.numerator * pow(q.denominator, p - 2, p) % p

        if self.invert_at is not None:
            dx = (x - frac_mod(self.invert_at)) % p
            if dx == 0:
                raise ZeroDivisionError("point maps to infinity")
            inv = pow(dx, p - 2, p)
            x, y = inv, y * pow(inv, self.genus + 1, p) % p
        return (
            (frac_mod(self.sx) * x + frac_mod(self.tx)) % p,
            frac_mod(self.sy) * y % p,
        )


@dataclass(frozen=True)
class HyperCurve:
    """y^2 = f(x), f monic, odd degree 2g+1, squarefree over the base.

    p is None for Q; otherwise an odd prime not dividing disc(f).
    f coefficients: Fractions if p is None, ints in [0,p) otherwise.
    """

    f: tuple
    p: int | None = None

    @property
    def genus(self) -> int:
        return (len(self.f) - 2) // 2

    @property
    def degree(self) -> int:
        return len(self.f) - 1


def _check_odd_model(f, p) -> None:
    d = len(f) - 1
    if d < 3 or d % 2 == 0:
        raise ClassforgeError(f"odd-degree model needed (got degree {d})")
    if p is None:
        if f[-1] != 1:
            raise ClassforgeError("curve polynomial must be monic")
        if not qpoly.is_squarefree(f):
            raise ClassforgeError("curve polynomial must be squarefree")
    else:
        if p == 2:
            raise ClassforgeError("p = 2 is out of scope for y^2 = f(x)")
        if f[-1] != 1:
            raise ClassforgeError("curve polynomial must be monic")
        fp = list(f)
        d1 = trim([i * v % p for i, v in enumerate(fp)][1:])
        if len(pgcd(fp, d1, p)) != 1:
            raise BadReduction(f"f is not squarefree mod {p}")


def curve_from_poly(f, p: int | None = None) -> tuple[HyperCurve, PointMap]:
    """Normalize y^2 = f(x) (odd degree, any rational coefficients) to a
    monic integral model; returns the curve and the point map onto it."""
    if p is not None:
        fl = [int(v) % p for v in f]
        trim(fl)
        fm, mp = _monicize_fp(fl, p)
        C = HyperCurve(tuple(fm), p)
        _check_odd_model(C.f, p)
        return C, mp
    fq = qpoly.poly(f)
    d = qpoly.degree(fq)
    if d < 3 or d % 2 == 0:
        raise ClassforgeError(f"odd-degree model needed (got degree {d})")
    g = (d - 1) // 2
    # step 1: make monic over Q: x -> x/lc, y -> y/lc^g scaled
    L = fq[-1]
    f1 = tuple(fq[i] * L ** (d - 1 - i) for i in range(d + 1))
    m1 = PointMap(sx=L, tx=QQ(0), sy=L**g)
    # step 2: clear denominators: x -> u^2 x, y -> u^d y
    u = lcm(*[c.denominator for c in f1])
    f2 = tuple(f1[i] * u ** (2 * (d - i)) for i in range(d + 1))
    m2 = PointMap(sx=m1.sx * u * u, tx=QQ(0), sy=m1.sy * u**d)
    C = HyperCurve(f2, None)
    _check_odd_model(C.f, None)
    return C, m2


def _monicize_fp(f: list[int], p: int) -> tuple[list[int], PointMap]:
    d = len(f) - 1
    g = (d - 1) // 2
    L = f[-1]
    if L == 1:
        return f, PointMap()
    fm = [f[i] * pow(L, d - 1 - i, p) % p for i in range(d + 1)]
    return fm, PointMap(sx=QQ(L), sy=QQ(pow(L, g, p)))


def move_root_to_infinity(f, r, p: int | None = None) -> tuple[HyperCurve, PointMap]:
    """Even-degree f with f(r) = 0: substitute x = r + 1/u, y = v/u^(g+1).

    Returns the odd-degree curve plus the composite point map (points with
    x = r go to infinity; the two points at infinity land at u = 0)."""
    if p is not None:
        fl = [int(v) % p for v in f]
        trim(fl)
        d = len(fl) - 1
        if d % 2 or d < 4:
            raise ClassforgeError("move_root_to_infinity needs even degree >= 4")
        r = int(r) % p
        # f(r + t) then reversal u^d * f(r + 1/u)
        shifted = _shift_fp(fl, r, p)
        if shifted[0] != 0:
            raise ClassforgeError(f"{r} is not a root mod {p}")
        rev = list(reversed(shifted))
        trim(rev)
        if len(rev) - 1 != d - 1:
            raise BadReduction("double root at r (f'(r) = 0)")
        fm, mono = _monicize_fp(rev, p)
        C = HyperCurve(tuple(fm), p)
        _check_odd_model(C.f, p)
        g = (d - 2) // 2
        return C, PointMap(
            sx=mono.sx, tx=QQ(0), sy=mono.sy, invert_at=QQ(r), genus=g
        )
    fq = qpoly.poly(f)
    d = qpoly.degree(fq)
    if d % 2 or d < 4:
        raise ClassforgeError("move_root_to_infinity needs even degree >= 4")
    r = QQ(r)
    if qpoly.evaluate(fq, r) != 0:
        raise ClassforgeError(f"{r} is not a root of f")
    shifted = qpoly.compose(fq, (r, QQ(1)))  # f(r + t)
    rev = qpoly.reversal(shifted, d)
    if qpoly.degree(rev) != d - 1:
        raise ClassforgeError("double root at r")
    g = (d - 2) // 2
    C, mono = curve_from_poly(rev)
    return C, PointMap(
        sx=mono.sx, tx=mono.tx, sy=mono.sy, invert_at=r, genus=g
    )


def _shift_fp(f: list[int], r: int, p: int) -> list[int]:
    """Coefficients of f(r + t) over F_p (synthetic Taylor shift)."""
    out = list(f)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] = (out[j] + r * out[j + 1]) % p
    return out


def reduce_curve_mod(C: HyperCurve, p: int) -> HyperCurve:
    """Reduction mod an odd prime of good reduction (integral monic model)."""
    if C.p is not None:
        raise ClassforgeError("curve is already over a finite field")
    if p == 2:
        raise BadReduction("p = 2")
    fl = []
    for c in C.f:
        if c.denominator % p == 0:
            raise BadReduction(f"denominator divisible by {p}")
        fl.append(c.numerator * pow(c.denominator, p - 2, p) % p)
    Cp = HyperCurve(tuple(fl), p)
    _check_odd_model(Cp.f, p)
    return Cp


def is_good_prime(C: HyperCurve, p: int) -> bool:
    try:
        reduce_curve_mod(C, p)
        return True
    except (BadReduction, ClassforgeError):
        return False


def bad_primes(f) -> set[int]:
    """Superset certificate: 2 plus primes dividing lc(f) * disc(f).

    f must be squarefree; denominators are cleared first.  Raises
    FactorizationIncomplete when the discriminant resists the budget."""
    fq = qpoly.poly(f)
    if not qpoly.is_squarefree(fq):
        raise ClassforgeError("bad_primes needs a squarefree polynomial")
    u = lcm(*[c.denominator for c in fq])
    fi = qpoly.poly([c * u for c in fq])
    disc = qpoly.discriminant(fi)
    out = {2}
    for n in (int(fi[-1]), disc.numerator):
        if n == 0:
            continue
        fac = factor_int_checked(abs(n))
        out.update(fac.factors)
    out.discard(1)
    return out


def curve_to_json(C: HyperCurve) -> dict:
    return {
        "base": "Q" if C.p is None else C.p,
        "f": [str(c) for c in C.f],
    }


def curve_from_json(obj) -> HyperCurve:
    base = obj["base"]
    if base == "Q":
        C, _ = curve_from_poly([QQ(str(c)) for c in obj["f"]])
        return C
    p = int(base)
    C, _ = curve_from_poly([int(str(c)) for c in obj["f"]], p)
    return C
