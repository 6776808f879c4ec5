"""Exact integer arithmetic: primality, factorization, residue symbols.

Everything here is deterministic: the Pollard-rho path is seeded from the
input, so repeated runs factor the same way.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass, field
from math import gcd, isqrt

from ..errors import FactorizationIncomplete

# Deterministic Miller-Rabin witnesses, valid for n < 3.317e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981

_prime_cache: list[int] = []
_prime_cache_limit = 0


def primes_up_to(n: int) -> list[int]:
    """Primes <= n by a cached sieve of Eratosthenes."""
    global _prime_cache, _prime_cache_limit
    if n <= _prime_cache_limit:
        return _prime_cache[: bisect_right(_prime_cache, n)]
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    _prime_cache = [i for i in range(2, n + 1) if sieve[i]]
    _prime_cache_limit = n
    return list(_prime_cache)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, fixed extra bases above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_BASES
    if n >= _MR_DETERMINISTIC_LIMIT:
        rng = random.Random(n)
        bases = _MR_BASES + tuple(rng.randrange(2, n - 1) for _ in range(28))
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


@dataclass
class IntFactorization:
    """Factorization of a nonzero integer, possibly incomplete.

    value = sign * prod(p^e) * cofactor, with cofactor = 1 when complete
    (the cofactor, if present, is composite and unfactored).
    """

    sign: int
    factors: dict[int, int] = field(default_factory=dict)
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        v = self.sign * self.cofactor
        for p, e in self.factors.items():
            v *= p**e
        return v

    def items(self):
        return sorted(self.factors.items())


def _brent_rho(n: int, budget: int, seed: int) -> tuple[int | None, int]:
    """Brent's cycle variant of Pollard rho.

    Returns (factor or None, iterations used). n must be odd composite.
    """
    rng = random.Random(seed)
    used = 0
    while used < budget:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and used < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1 and used < budget:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                used += min(m, r - k)
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                used += 1
        if 1 < g < n:
            return g, used
    return None, used


def factor_int(
    n: int, trial_bound: int = 10**6, rho_budget: int = 10**7
) -> IntFactorization:
    """Factor a nonzero integer: trial division then seeded Brent-rho.

    Never guesses: if the budget runs out the result carries the composite
    cofactor and .complete is False.
    """
    if n == 0:
        raise ValueError("factor_int(0)")
    fac = IntFactorization(sign=-1 if n < 0 else 1)
    n = abs(n)
    if n == 1:
        return fac
    for p in primes_up_to(min(trial_bound, isqrt(n) + 1)):
        if p * p > n:
            break
        while n % p == 0:
            fac.factors[p] = fac.factors.get(p, 0) + 1
            n //= p
    if n == 1:
        return fac
    if n < trial_bound * trial_bound or is_probable_prime(n):
        fac.factors[n] = fac.factors.get(n, 0) + 1
        return fac
    # rho on the remaining composite part
    stack = [n]
    budget = rho_budget
    while stack:
        m = stack.pop()
        if is_probable_prime(m):
            fac.factors[m] = fac.factors.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend([r, r])
            continue
        d, used = _brent_rho(m, budget, seed=m)
        budget -= used
        if d is None:
            fac.cofactor *= m
            continue
        stack.extend([d, m // d])
    return fac


def factor_int_checked(n: int, **kw) -> IntFactorization:
    """factor_int, raising FactorizationIncomplete on budget exhaustion."""
    fac = factor_int(n, **kw)
    if not fac.complete:
        raise FactorizationIncomplete(fac)
    return fac


def squarefree_part(n: int, **kw) -> int:
    """n divided by its largest square divisor (sign preserved)."""
    if n == 0:
        raise ValueError("squarefree_part(0)")
    fac = factor_int_checked(n, **kw)
    d = fac.sign
    for p, e in fac.factors.items():
        if e % 2:
            d *= p
    return d


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n), the standard extension of Legendre/Jacobi."""
    if n == 0:
        raise ValueError("kronecker_symbol with n = 0")
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    # strip factors of 2 from n
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def power_residue(y: int, p_i: int, q: int) -> bool:
    """True iff y is a p_i-th power residue mod q, i.e. y^((q-1)/p_i) = 1.

    Hypotheses: q prime, q = 1 mod p_i (q = 1 mod 4 when p_i = 2), (y,q)=1.
    """
    if not is_probable_prime(q):
        raise ValueError(f"q = {q} is not prime")
    if p_i == 2:
        if q % 4 != 1:
            raise ValueError(f"q = {q} must be 1 mod 4 for p_i = 2")
    elif (q - 1) % p_i != 0:
        raise ValueError(f"q = {q} must be 1 mod p_i = {p_i}")
    if gcd(y, q) != 1:
        raise ValueError(f"gcd(y, q) != 1 for y = {y}, q = {q}")
    return pow(y, (q - 1) // p_i, q) == 1


def crt(residues, moduli) -> tuple[int, int]:
    """Chinese remainder for pairwise coprime moduli: (x, lcm)."""
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        g, p, _ = xgcd(m, n)
        if g != 1:
            raise ValueError("moduli not coprime")
        x = (x + (r - x) * p % n * m) % (m * n)
        m *= n
    return x, m


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: g, x, y with a*x + b*y = g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a mod odd prime p, or None if a is a non-residue."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
