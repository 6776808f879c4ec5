"""Exact arithmetic core: integers, polynomials over Q and F_p, series.

Serialization convention shared by every module: polynomials are JSON arrays
of coefficient strings, low degree first ("3", "-1/2", ...).
"""

from fractions import Fraction

from . import fppoly, multipoly, qpoly, series
from .fppoly import PolyFp, factor_fp, roots_fp
from .integers import (
    IntFactorization,
    crt,
    factor_int,
    factor_int_checked,
    is_probable_prime,
    is_square,
    kronecker_symbol,
    power_residue,
    primes_up_to,
    sqrt_mod,
    squarefree_part,
    xgcd,
)
from .multipoly import MPoly
from .qpoly import (
    discriminant,
    poly,
    poly_gcd,
    resultant,
    sturm_real_root_count,
)
from .series import PowerSeriesRat, series_mth_root

QQ = Fraction


def poly_to_json(f) -> list[str]:
    """Polynomial -> JSON array of coefficient strings, low degree first."""
    return [str(c) for c in f]


def poly_from_json(arr) -> tuple:
    return qpoly.poly(Fraction(str(c)) for c in arr)


__all__ = [
    "Fraction",
    "IntFactorization",
    "MPoly",
    "PolyFp",
    "PowerSeriesRat",
    "QQ",
    "crt",
    "discriminant",
    "factor_fp",
    "factor_int",
    "factor_int_checked",
    "fppoly",
    "is_probable_prime",
    "is_square",
    "kronecker_symbol",
    "multipoly",
    "poly",
    "poly_from_json",
    "poly_gcd",
    "poly_to_json",
    "power_residue",
    "primes_up_to",
    "qpoly",
    "resultant",
    "roots_fp",
    "series",
    "series_mth_root",
    "sqrt_mod",
    "squarefree_part",
    "sturm_real_root_count",
    "xgcd",
]
