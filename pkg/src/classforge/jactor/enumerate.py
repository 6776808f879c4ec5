"""Brute-force Jacobian tables for tiny curves (test oracles).

Enumerates every valid Mumford pair (u, v) with deg u <= g over F_p by raw
search; f squarefree makes the condition u | v^2 - f exactly characterize
reduced divisors.
"""

from __future__ import annotations

from itertools import product

from ..errors import ClassforgeError
from .curve import HyperCurve
from .mumford import MumfordDivisor, cantor_add, divisor_key


def all_reduced_divisors(C: HyperCurve) -> list[MumfordDivisor]:
    if C.p is None:
        raise ClassforgeError("enumeration needs a finite base field")
    p, g = C.p, C.genus
    f = list(C.f)
    out = [MumfordDivisor((1,), ())]
    from .mumford import _mod, _mul, _sub  # list kernels

    for du in range(1, g + 1):
        for ucoef in product(range(p), repeat=du):
            u = list(ucoef) + [1]
            for vcoef in product(range(p), repeat=du):
                v = list(vcoef)
                while v and v[-1] == 0:
                    v.pop()
                diff = _sub(_mul(v, v, p), f, p)
                if not _mod(diff, u, p):
                    out.append(MumfordDivisor(tuple(u), tuple(v)))
    return out


def group_table(C: HyperCurve):
    """(elements, index map, Cayley table) built with cantor_add."""
    elems = all_reduced_divisors(C)
    index = {divisor_key(D): i for i, D in enumerate(elems)}
    n = len(elems)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            k = index[divisor_key(cantor_add(C, elems[i], elems[j]))]
            table[i][j] = k
            table[j][i] = k
    return elems, index, table
