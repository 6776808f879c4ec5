"""Binary quadratic forms: reduction, Gauss composition, principality.

A form (a, b, c) means a x^2 + b x y + c y^2, primitive, of discriminant
D = b^2 - 4ac.  For D < 0 forms are positive definite (a > 0) and reduction
is canonical; for D > 0 we work with reduction cycles and narrow (proper)
equivalence.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import NamedTuple

from ..errors import BudgetExceeded, CertificateError, FactorizationIncomplete
from ..exactmath.integers import factor_int_checked, is_square, squarefree_part, xgcd


class FundDisc(NamedTuple):
    """Fundamental discriminant D with squarefree core d (D = d or 4d)."""

    D: int
    d: int

    @property
    def sign(self) -> int:
        return -1 if self.D < 0 else 1


def fundamental_discriminant(n: int, **factor_kw) -> FundDisc:
    """Fundamental discriminant of Q(sqrt(n)); n nonzero, not a square."""
    if n == 0 or is_square(n):
        raise ValueError(f"{n} does not define a quadratic field")
    d = squarefree_part(n, **factor_kw)
    D = d if d % 4 == 1 else 4 * d
    return FundDisc(D, d)


def conductor_and_disc(n: int, **factor_kw) -> tuple[int, FundDisc]:
    """Write n = c^2 * D with D fundamental; returns (c, FundDisc)."""
    fd = fundamental_discriminant(n, **factor_kw)
    c2 = n // fd.D
    c = isqrt(c2)
    if c * c != c2:
        raise ValueError("internal: conductor not square")
    return c, fd


class QuadForm(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1


def form(a: int, b: int, c: int) -> QuadForm:
    f = QuadForm(a, b, c)
    if not f.is_primitive():
        raise ValueError(f"form {f} is not primitive")
    return f


def principal_form(D: int) -> QuadForm:
    b = D & 1
    return QuadForm(1, b, (b * b - D) // 4)


def opposite(f: QuadForm) -> QuadForm:
    """Inverse class."""
    return QuadForm(f.a, -f.b, f.c)


# -- reduction, D < 0 ----------------------------------------------------------

def is_reduced_neg(f: QuadForm) -> bool:
    a, b, c = f
    if not (-a < b <= a <= c):
        return False
    return b >= 0 if a == c else True


def reduce_neg(f: QuadForm) -> QuadForm:
    a, b, c = f
    if a < 0:
        raise ValueError("definite form must have a > 0")
    while True:
        if c < a:
            a, b, c = c, -b, a
        if b > a or b <= -a:
            # normalize b into (-a, a]
            r = b % (2 * a)
            if r > a:
                r -= 2 * a
            c += (r * r - b * b) // (4 * a)
            b = r
        if a <= c:
            if a == c and b < 0:
                b = -b
            if abs(b) == a and b < 0:
                b = -b
            return QuadForm(a, b, c)


# -- reduction and cycles, D > 0 -----------------------------------------------

def is_reduced_pos(f: QuadForm) -> bool:
    """|sqrt(D) - 2|a|| < b < sqrt(D), in exact integer arithmetic."""
    D = f.disc
    b = f.b
    if b <= 0:
        return False
    s = isqrt(D)
    if b > s:
        return False
    a2 = 2 * abs(f.a)
    t = a2 - b
    if t >= 0 and t * t >= D:
        return False
    return D < (a2 + b) ** 2


def _norm_b_pos(b: int, c: int, D: int) -> int:
    """Normalization target for b' = -b mod 2|c| in the rho step."""
    a2 = 2 * abs(c)
    s = isqrt(D)
    b2 = (-b) % a2
    if abs(c) > s:
        # not yet close to reduced: pull b' into (-|c|, |c|]
        if b2 > abs(c):
            b2 -= a2
    else:
        # largest b' <= sqrt(D) in its residue class
        b2 += ((s - b2) // a2) * a2
    return b2


def rho_step(f: QuadForm) -> QuadForm:
    """One reduction/cycle step for indefinite forms."""
    D = f.disc
    b2 = _norm_b_pos(f.b, f.c, D)
    c2 = (b2 * b2 - D) // (4 * f.c)
    return QuadForm(f.c, b2, c2)


def reduce_pos(f: QuadForm) -> QuadForm:
    g = f
    for _ in range(10_000_000):
        if is_reduced_pos(g):
            return g
        g = rho_step(g)
    raise BudgetExceeded("indefinite reduction did not terminate")


def cycle_of(f: QuadForm, budget: int = 10_000_000) -> list[QuadForm]:
    """Full reduction cycle of (the reduction of) f, as a list."""
    start = reduce_pos(f)
    out = [start]
    g = rho_step(start)
    while g != start:
        out.append(g)
        if len(out) > budget:
            raise BudgetExceeded(f"cycle budget {budget} exceeded for D={f.disc}")
        g = rho_step(g)
    return out


def reduce_form(f: QuadForm) -> QuadForm:
    return reduce_neg(f) if f.disc < 0 else reduce_pos(f)


# -- composition ---------------------------------------------------------------

def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Gauss/Dirichlet composition of primitive forms, reduced output."""
    D = f.disc
    if g.disc != D:
        raise ValueError("discriminant mismatch")
    a1, b1, _ = f
    a2, b2, _ = g
    s = (b1 + b2) // 2
    d0, x0, y0 = xgcd(a1, a2)
    d, x1, w = xgcd(d0, s)
    # x*a1 + y*a2 + w*s = d
    x, y = x0 * x1, y0 * x1
    a3 = a1 * a2 // (d * d)
    num = x * a1 * b2 + y * a2 * b1 + w * (b1 * b2 + D) // 2
    if num % d:
        raise ArithmeticError("composition: inexact division (non-primitive input?)")
    b3 = (num // d) % (2 * a3)
    if (b3 * b3 - D) % (4 * a3):
        raise ArithmeticError("composition: b^2 != D mod 4a")
    c3 = (b3 * b3 - D) // (4 * a3)
    return reduce_form(QuadForm(a3, b3, c3))


def power(f: QuadForm, e: int) -> QuadForm:
    """e-th power in the class group (reduced)."""
    D = f.disc
    if e < 0:
        return power(opposite(f), -e)
    r = reduce_form(principal_form(D))
    b = reduce_form(f)
    while e:
        if e & 1:
            r = compose(r, b)
        b = compose(b, b)
        e >>= 1
    return r


# -- principality --------------------------------------------------------------

# (D -> set of packed (a, b) of the principal cycle); keep at most two
# discriminants alive, the cycles can run to millions of forms
_pos_principal_cycles: dict[int, set] = {}


def _pack(a: int, b: int, s: int) -> int:
    # collision-free for reduced forms: |a| <= s, 0 < b <= s
    return (a + s) * (s + 1) + b


def principal_cycle_set(D: int, budget: int = 25_000_000) -> set:
    """Packed (a, b) pairs of the full principal reduction cycle of D > 0."""
    cached = _pos_principal_cycles.get(D)
    if cached is not None:
        return cached
    s = isqrt(D)
    f0 = reduce_pos(principal_form(D))
    a0, b0 = f0.a, f0.b
    seen = {_pack(a0, b0, s)}
    add = seen.add
    a, b = a0, b0
    n = 0
    while True:
        # inlined rho step on the reduced cycle (|c| < sqrt(D) throughout)
        c = (b * b - D) // (4 * a)
        a2 = 2 * abs(c)
        b2 = (-b) % a2
        b2 += ((s - b2) // a2) * a2
        a, b = c, b2
        if a == a0 and b == b0:
            break
        add((a + s) * (s + 1) + b)
        n += 1
        if n > budget:
            raise BudgetExceeded(f"principal cycle budget {budget} hit for D={D}")
    while len(_pos_principal_cycles) >= 2:
        _pos_principal_cycles.pop(next(iter(_pos_principal_cycles)))
    _pos_principal_cycles[D] = seen
    return seen


def is_principal(f: QuadForm, budget: int = 25_000_000) -> bool:
    """True iff f is (narrowly, for D > 0) equivalent to the principal form."""
    D = f.disc
    if D < 0:
        return reduce_neg(f) == reduce_neg(principal_form(D))
    g = reduce_pos(f)
    return _pack(g.a, g.b, isqrt(D)) in principal_cycle_set(D, budget)


def is_equivalent(f: QuadForm, g: QuadForm, budget: int = 10_000_000) -> bool:
    D = f.disc
    if D != g.disc:
        return False
    if D < 0:
        return reduce_neg(f) == reduce_neg(g)
    rf = reduce_pos(f)
    rg = reduce_pos(g)
    if rf == rg:
        return True
    return rg in frozenset(cycle_of(rf, budget))


def class_order_of_form(f: QuadForm, bound: int = 10_000) -> int:
    """Exact order of [f] by iterated composition (small orders only)."""
    D = f.disc
    ident = reduce_form(principal_form(D))
    g = reduce_form(f)
    acc = g
    for n in range(1, bound + 1):
        if (D < 0 and acc == ident) or (D > 0 and is_principal(acc)):
            return n
        acc = compose(acc, g)
    raise BudgetExceeded(f"order of {f} exceeds {bound}")


def two_rank_genus(D, **factor_kw) -> int:
    """Gauss 2-rank t-1 from the prime discriminant factorization of D.

    Valid for fundamental D; for D > 0 this is the rank in the narrow group.
    """
    D = D.D if isinstance(D, FundDisc) else D
    if D == 1 or D == 0:
        raise ValueError("not a discriminant")
    try:
        fac = factor_int_checked(abs(D), **factor_kw)
    except FactorizationIncomplete:
        raise
    t = sum(1 for p in fac.factors if p != 2)
    if D % 4 == 0:
        t += 1  # one even prime discriminant (-4, 8, or -8)
    return t - 1


def form_to_json(f: QuadForm) -> list[str]:
    return [str(f.a), str(f.b), str(f.c)]


def form_from_json(arr) -> QuadForm:
    a, b, c = (int(v) for v in arr)
    return QuadForm(a, b, c)


def verify_certificate_precondition(f: QuadForm, m: int) -> None:
    if not is_principal(power(f, m)):
        raise CertificateError(f"power(form, {m}) is not principal for {f}")
