"""Point counts over F_{p^k}, zeta numerators, and Jacobian orders.

Two exact routes to #Jac(F_p):
  * zeta path: count N_1..N_g, Newton's identities + functional equation,
    #J = P(1); needs p^g within the counting budget;
  * interval path (any p): intersect, over several pseudo-random divisor
    classes D, the sets {n in Weil interval : n*D = 0} found by
    baby-step/giant-step, until one candidate remains.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt

from ..errors import BudgetExceeded, ClassforgeError
from ..exactmath.fppoly import is_irreducible, peval
from ..exactmath.integers import factor_int_checked, sqrt_mod
from .curve import HyperCurve
from .mumford import (
    MumfordDivisor,
    cantor_add,
    cantor_neg,
    divisor_key,
    divisor_of_point,
    identity_divisor,
    is_identity,
    scalar_mul,
)

QQ = Fraction


def _find_irreducible(p: int, k: int) -> list[int]:
    """Smallest monic irreducible of degree k over F_p (deterministic scan)."""
    if k == 1:
        return [0, 1]
    base = [0] * k + [1]
    # scan constant-first lexicographic tails
    counter = [0] * k
    while True:
        f = [counter[i] for i in range(k)] + [1]
        if f[0] != 0 and is_irreducible(f, p):
            return f
        i = 0
        while i < k:
            counter[i] += 1
            if counter[i] < p:
                break
            counter[i] = 0
            i += 1
        if i == k:
            raise ClassforgeError("no irreducible found (impossible)")


class _Fq:
    """F_{p^k} with tuple elements (coefficients mod the scanned modulus)."""

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k
        self.modulus = _find_irreducible(p, k)

    def elements(self):
        p, k = self.p, self.k
        cur = [0] * k
        q = p**k
        for _ in range(q):
            yield tuple(cur)
            i = 0
            while i < k:
                cur[i] += 1
                if cur[i] < p:
                    break
                cur[i] = 0
                i += 1

    def mul(self, a, b):
        p, k = self.p, self.k
        c = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    c[i + j] += x * y
        # reduce mod the monic modulus
        m = self.modulus
        for i in range(len(c) - 1, k - 1, -1):
            v = c[i] % p
            if v:
                for j in range(k):
                    c[i - k + j] -= v * m[j]
            c[i] = 0
        return tuple(v % p for v in c[:k])

    def is_square_set(self):
        """Set of nonzero squares (memory q/2)."""
        sq = set()
        for a in self.elements():
            if any(a):
                sq.add(self.mul(a, a))
        return sq


def count_points_fq(C: HyperCurve, k: int) -> int:
    """#C(F_{p^k}) including the single point at infinity (odd model)."""
    p = C.p
    if p is None:
        raise ClassforgeError("counting needs a finite base field")
    f = list(C.f)
    if k == 1:
        sq = [False] * p
        for t in range((p + 1) // 2):
            sq[t * t % p] = True
        n = 1  # infinity
        for x in range(p):
            fx = peval(f, x, p)
            if fx == 0:
                n += 1
            elif sq[fx]:
                n += 2
        return n
    K = _Fq(p, k)
    squares = K.is_square_set()
    zero = (0,) * k
    n = 1
    for x in K.elements():
        acc = zero
        for c in reversed(f):
            acc = _addc(K.mul(acc, x), c, p)
        if acc == zero:
            n += 1
        elif acc in squares:
            n += 2
    return n


def _addc(a, c, p):
    b = list(a)
    b[0] = (b[0] + c) % p
    return tuple(b)


def curve_point_counts(C: HyperCurve, up_to: int, budget: int = 10**8) -> list[int]:
    """[N_1..N_k]; refuses when p^k exceeds the counting budget."""
    p = C.p
    if p is None:
        raise ClassforgeError("counting needs a finite base field")
    if p**up_to > budget:
        raise BudgetExceeded(f"{p}^{up_to} exceeds counting budget {budget}")
    return [count_points_fq(C, k) for k in range(1, up_to + 1)]


def zeta_numerator(C: HyperCurve, counts: list[int]) -> list[int]:
    """Coefficients c_0..c_2g of P(T) = prod(1 - alpha_i T) from N_1..N_g.

    Newton's identities give c_1..c_g; the functional equation
    c_(2g-i) = p^(g-i) c_i fills the rest.  Symmetry is asserted exact."""
    p, g = C.p, C.genus
    if len(counts) < g:
        raise ClassforgeError(f"need N_1..N_{g}")
    s = [0] + [p**k + 1 - counts[k - 1] for k in range(1, g + 1)]  # power sums
    e = [QQ(1)] + [QQ(0)] * g
    for k in range(1, g + 1):
        acc = QQ(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * s[i]
        e[k] = acc / k
    c = [0] * (2 * g + 1)
    for i in range(g + 1):
        ci = (-1) ** i * e[i]
        if ci.denominator != 1:
            raise ClassforgeError("zeta numerator is not integral")
        c[i] = int(ci)
    for i in range(g):
        c[2 * g - i] = p ** (g - i) * c[i]
    return c


def jacobian_order_zeta(C: HyperCurve, budget: int = 10**8) -> int:
    counts = curve_point_counts(C, C.genus, budget)
    return sum(zeta_numerator(C, counts))


def weil_interval(p: int, g: int) -> tuple[int, int]:
    """Exact integer bounds [ceil((sqrt p - 1)^2g), floor((sqrt p + 1)^2g)]."""

    def expand(sign: int) -> tuple[int, int]:
        # (sqrt p + sign)^(2g) = a + b sqrt p
        a, b = 1, 0
        for _ in range(2 * g):
            a, b = a * sign + b * p, a + b * sign
        return a, b

    a1, b1 = expand(-1)
    lo = a1 + _floor_sqrt_mult(b1, p)
    a2, b2 = expand(1)
    hi = a2 + _floor_sqrt_mult(b2, p)
    return lo + (0 if _is_exact(b1, p) else 1), hi


def _floor_sqrt_mult(b: int, p: int) -> int:
    """floor(b * sqrt(p)) for integer b (may be negative)."""
    if b >= 0:
        return isqrt(b * b * p)
    return -isqrt(b * b * p) - (0 if _is_exact(b, p) else 1)


def _is_exact(b: int, p: int) -> bool:
    r = isqrt(b * b * p)
    return r * r == b * b * p


_SQUARE_TABLE_CACHE: dict = {}


def _fq_mul_numpy(a, b, p, k, pi, np):
    """Product in F_p[T]/(pi) on int32 coordinate arrays, mods deferred.

    Safe ranges: products < k*p^2 < 2^31 for p <= 50, k <= 6."""
    c = [None] * (2 * k - 1)
    for i in range(k):
        ai = a[i]
        for j in range(k):
            prod = ai * b[j]
            c[i + j] = prod if c[i + j] is None else c[i + j] + prod
    for t in range(2 * k - 2, k - 1, -1):
        v = c[t] % p
        for j in range(k):
            if pi[j]:
                c[t - k + j] = c[t - k + j] + (p - pi[j]) * v
        c[t] = None
    return [c[i] % p for i in range(k)]


def _count_fq_numpy(f: list[int], p: int, k: int, modulus: list[int]) -> int:
    """Vectorized #C(F_{p^k}), chunked to bound memory."""
    import numpy as np

    q = p**k
    pi = modulus
    chunk = 6 * 10**6

    def enc(a):
        e = a[0].astype(np.int64)
        for i in range(1, k):
            e += a[i].astype(np.int64) * p**i
        return e

    key = (p, k)
    sq = _SQUARE_TABLE_CACHE.get(key)
    build_sq = sq is None
    if build_sq:
        sq = np.zeros(q, dtype=bool)
    nzero = 0
    nsquare = 0
    fenc_parts = []
    for start in range(0, q, chunk):
        idx = np.arange(start, min(start + chunk, q), dtype=np.int64)
        coords = [((idx // p**i) % p).astype(np.int32) for i in range(k)]
        if build_sq:
            sq[enc(_fq_mul_numpy(coords, coords, p, k, pi, np))] = True
        acc = [np.zeros(len(idx), dtype=np.int32) for _ in range(k)]
        for c in reversed(f):
            acc = _fq_mul_numpy(acc, coords, p, k, pi, np)
            acc[0] = (acc[0] + c) % p
        fenc_parts.append(enc(acc))
    if build_sq:
        _SQUARE_TABLE_CACHE[key] = sq
    for fe in fenc_parts:
        zero = fe == 0
        nzero += int(zero.sum())
        nsquare += int((sq[fe] & ~zero).sum())
    return 1 + nzero + 2 * nsquare


def count_points_fq_auto(C: HyperCurve, k: int) -> int:
    """count_points_fq with a numpy fast path for larger fields."""
    p = C.p
    if k >= 2 and p**k > 2 * 10**4:
        try:
            K = _Fq(p, k)
            return _count_fq_numpy(list(C.f), p, k, K.modulus)
        except ImportError:
            pass
    return count_points_fq(C, k)


def _partial_zeta(C: HyperCurve, budget: int) -> tuple[list[int], int, int]:
    """(c_0..c_{g-1}, A, At) from N_1..N_{g-1}; the single unknown is c_g.

    P(1) = c_g + A and P(-1) = (-1)^g c_g + At."""
    p, g = C.p, C.genus
    if g >= 2 and p ** (g - 1) > budget:
        raise BudgetExceeded(f"{p}^{g-1} exceeds counting budget {budget}")
    counts = [count_points_fq_auto(C, k) for k in range(1, g)]
    s = [0] + [p**k + 1 - counts[k - 1] for k in range(1, g)]
    e = [QQ(1)] + [QQ(0)] * (g - 1)
    for kk in range(1, g):
        acc = QQ(0)
        for i in range(1, kk + 1):
            acc += (-1) ** (i - 1) * e[kk - i] * s[i]
        e[kk] = acc / kk
    c = []
    for i in range(g):
        ci = (-1) ** i * e[i]
        if ci.denominator != 1:
            raise ClassforgeError("zeta coefficients not integral")
        c.append(int(ci))
    A = sum(c[i] * (1 + p ** (g - i)) for i in range(g))
    At = sum((-1) ** i * c[i] * (1 + p ** (g - i)) for i in range(g))
    return c, A, At


def random_divisor(C: HyperCurve, rng: random.Random) -> MumfordDivisor:
    """Pseudo-random divisor class: sum of g random points minus g*infinity."""
    p, g = C.p, C.genus
    f = list(C.f)
    D = identity_divisor(C)
    made = 0
    guard = 0
    while made < g:
        guard += 1
        if guard > 200 * (g + 1):
            break
        x = rng.randrange(p)
        fx = peval(f, x, p)
        y = sqrt_mod(fx, p)
        if y is None:
            continue
        D = cantor_add(C, D, divisor_of_point(C, x, y if rng.random() < 0.5 else (-y) % p))
        made += 1
    return D


def _annihilators_in_interval(C, D, lo, hi) -> list[int]:
    """All n in [lo, hi] with n*D = 0, by baby-step giant-step.

    A giant-step match (lo+im)*D = -j*D is exactly (lo+im+j)*D = 0, so every
    baby index j sharing the key is a hit (no further verification needed)."""
    width = hi - lo + 1
    m = isqrt(width) + 1
    baby: dict = {}
    cur = identity_divisor(C)
    for j in range(m):
        baby.setdefault(divisor_key(cur), []).append(j)
        cur = cantor_add(C, cur, D)
    step = cur  # m*D
    hits = []
    giant = scalar_mul(C, lo, D)
    i = 0
    while lo + i * m <= hi:
        key = divisor_key(cantor_neg(C, giant))
        for j in baby.get(key, ()):
            n = lo + i * m + j
            if n <= hi:
                hits.append(n)
        giant = cantor_add(C, giant, step)
        i += 1
    return sorted(set(hits))


def _bsgs_candidates(C: HyperCurve, lo: int, hi: int, rng, trials: int) -> set[int]:
    """Intersection of annihilator sets of several random classes in [lo, hi]."""
    candidates: set[int] | None = None
    stall = 0
    for _ in range(trials):
        D = random_divisor(C, rng)
        if is_identity(D):
            continue
        hits = set(_annihilators_in_interval(C, D, lo, hi))
        if candidates is not None and hits >= candidates:
            stall += 1
            if stall >= 2:
                break
            continue
        stall = 0
        candidates = hits if candidates is None else candidates & hits
        if len(candidates) <= 1:
            break
    if candidates is None:
        # all sampled classes were trivial: every n annihilates
        return set(range(max(lo, 1), hi + 1))
    return candidates


def quadratic_twist(C: HyperCurve) -> HyperCurve:
    """y^2 = c f(x) for the smallest quadratic non-residue c (monicized)."""
    from .curve import curve_from_poly

    p = C.p
    c = 2
    while kronecker_like(c, p) != -1:
        c += 1
    Ct, _ = curve_from_poly([c * v % p for v in C.f], p)
    return Ct


def kronecker_like(a: int, p: int) -> int:
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def jacobian_order_bsgs(
    C: HyperCurve,
    max_trials: int = 8,
    seed: int = 0,
    count_budget: int = 10**7,
    fallback_budget: int = 3 * 10**8,
) -> int:
    """Exact #Jac(F_p) for any p: N_1..N_{g-1} pin every zeta coefficient but
    c_g, then baby-step/giant-step over the narrow interval |c_g| <= C(2g,g)p^{g/2}
    determines it; a quadratic-twist pass breaks residual exponent ambiguity."""
    p, g = C.p, C.genus
    if p is None:
        raise ClassforgeError("finite base field required")
    _, A, At = _partial_zeta(C, count_budget)
    from math import comb

    B = comb(2 * g, g) * (isqrt(p**g) + 1)
    wlo, whi = weil_interval(p, g)
    lo, hi = max(wlo, A - B, 1), min(whi, A + B)
    rng = random.Random((p, tuple(C.f), seed).__repr__())
    cand = _bsgs_candidates(C, lo, hi, rng, max_trials)
    if len(cand) == 1:
        return cand.pop()
    if not cand:
        raise ClassforgeError("no candidate order in interval (bug)")
    # disambiguate with the twist: #J~ = (-1)^g c_g + At, same c_g
    Ct = quadratic_twist(C)
    sgn = (-1) ** g
    tvals = sorted(sgn * (n - A) + At for n in cand)
    tlo = max(weil_interval(p, g)[0], min(tvals), 1)
    thi = min(weil_interval(p, g)[1], max(tvals))
    rng2 = random.Random((p, tuple(Ct.f), seed, "twist").__repr__())
    candt = _bsgs_candidates(Ct, tlo, thi, rng2, max_trials)
    joint = [n for n in cand if sgn * (n - A) + At in candt]
    if len(joint) == 1:
        return joint[0]
    # rare: both groups have small exponent; settle it by the exact N_g count
    if p**g > fallback_budget:
        raise BudgetExceeded(
            f"jacobian order ambiguous after twist pass: {sorted(joint)[:6]} "
            f"and p^g = {p**g} exceeds the exact-count fallback budget"
        )
    counts = [count_points_fq_auto(C, k) for k in range(1, g + 1)]
    n = sum(zeta_numerator(C, counts))
    if n not in cand:
        raise ClassforgeError("exact count disagrees with annihilator data (bug)")
    return n


def jacobian_order(C: HyperCurve, budget: int = 10**8, prefer: str = "auto") -> int:
    """#Jac(F_p): zeta path within budget, interval path beyond."""
    p = C.p
    if p is None:
        raise ClassforgeError("finite base field required")
    if prefer == "zeta" or (prefer == "auto" and p**C.genus <= min(budget, 10**4)):
        return jacobian_order_zeta(C, budget)
    return jacobian_order_bsgs(C)


def class_order(
    C: HyperCurve,
    D: MumfordDivisor,
    jac_order: int | None = None,
    m_hint: int | None = None,
    search_bound: int | None = None,
) -> int:
    """Exact order of [D]; uses |Jac| when available, else a small search.

    Without |Jac|, searches n*D = 0 for n <= search_bound (default 3*m_hint
    per the design budget) and raises BudgetExceeded on failure."""
    if is_identity(D):
        return 1
    if jac_order is None:
        bound = search_bound or (3 * m_hint if m_hint else 60)
        acc = D
        for n in range(1, bound + 1):
            if is_identity(acc):
                return n
            acc = cantor_add(C, acc, D)
        if is_identity(acc):
            return bound + 1
        raise BudgetExceeded(f"order exceeds direct search bound {bound}")
    n = jac_order
    if not is_identity(scalar_mul(C, n, D)):
        raise ClassforgeError("divisor not annihilated by the Jacobian order")
    for q in sorted(factor_int_checked(n).factors):
        while n % q == 0 and is_identity(scalar_mul(C, n // q, D)):
            n //= q
    return n
