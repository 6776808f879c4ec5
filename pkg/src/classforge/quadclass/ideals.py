"""Ideals of quadratic maximal orders and m-th-power class certificates.

The key construction: given integers (xbase, A, F) with A^2 - F = 4*xbase^m
and gcd(A, xbase) = 1, the element theta = (A + sqrt(F))/2 is an algebraic
integer of Q(sqrt(F)) whose conjugate is coprime to it, so the ideal
a = (xbase, theta) of the maximal order satisfies a^m = (theta).  Its form
class is an m-torsion certificate candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ..errors import CertificateError
from ..exactmath.integers import is_square
from . import forms
from .forms import FundDisc, QuadForm, conductor_and_disc


def _hnf_2col(rows: list[tuple[int, int]]) -> tuple[int, int, int]:
    """Hermite form of the Z-module spanned by rows (p, q) -> (x, y, z).

    Basis (x, 0), (y, z) with z | x, z | y... returns x > 0, 0 <= y < x.
    """
    # reduce to two rows by gcd elimination on the second coordinate
    x = 0
    y, z = 0, 0
    for (p, q) in rows:
        # merge (p, q) into current basis
        if q == 0:
            x = gcd(x, p)
            continue
        if z == 0:
            y, z = p, q
            continue
        g, u, v = _xgcd(z, q)
        # new second row: u*(y,z) + v*(p,q); leftover goes to the lattice of (.,0)
        ny = u * y + v * p
        x = gcd(x, (q // g) * y - (z // g) * p)
        y, z = ny, g
    if z < 0:
        y, z = -y, -z
    x = abs(x)
    if x:
        y %= x
    return x, y, z


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def ideal_to_form(gens: list[tuple[int, int]], D: int) -> QuadForm:
    """Form class of the O_D-ideal generated by p + q*omega for (p,q) in gens.

    omega = (delta + sqrt(D))/2 with delta = D mod 2; the module is closed
    under multiplication by omega before the HNF.
    """
    delta = D & 1
    om2_const = (D - delta) // 4  # omega^2 = om2_const + delta*omega
    rows = []
    for (p, q) in gens:
        rows.append((p, q))
        # (p + q*omega)*omega = q*om2_const + (p + q*delta)*omega
        rows.append((q * om2_const, p + q * delta))
    x, y, z = _hnf_2col(rows)
    if z == 0 or x == 0 or x % z or y % z:
        raise CertificateError("degenerate ideal module")
    a = x // z
    b = 2 * (y // z) + delta
    if (b * b - D) % (4 * a):
        raise CertificateError("module is not an ideal of the order")
    c = (b * b - D) // (4 * a)
    if D < 0 and a < 0:
        a, c = -a, -c
    f = QuadForm(a, b, c)
    if not f.is_primitive():
        raise CertificateError("ideal does not give a primitive form")
    return forms.reduce_form(f)


@dataclass(frozen=True)
class MthPowerClass:
    """Certificate datum: the class of (xbase, (A+sqrt(F))/2) with a^m = (theta)."""

    form: QuadForm
    disc: FundDisc
    conductor: int
    xbase: int
    A: int
    F: int
    m: int


def ideal_class_from_mth_power(
    xbase: int, A: int, F: int, m: int, *, check_power: bool = True, **factor_kw
) -> MthPowerClass:
    """Form class of a = (xbase, (A + sqrt(F))/2), with a^m principal.

    Requires the certificate identity A^2 - F = 4*xbase^m and the coprimality
    gcd(A, xbase) = 1 (the paper-side set-T condition); violations raise
    CertificateError.  F may be any non-square radicand; the class lives in
    the maximal order of Q(sqrt(F)).
    """
    if xbase == 0:
        raise CertificateError("xbase must be nonzero")
    if F == 0 or is_square(F):
        raise CertificateError(f"radicand {F} is a square")
    if A * A - F != 4 * xbase**m:
        raise CertificateError("identity A^2 - F = 4*xbase^m fails")
    if gcd(A, xbase) != 1:
        raise CertificateError(
            f"coprimality gcd(A, xbase) = {gcd(A, xbase)} != 1 (set-T condition)"
        )
    G, fd = conductor_and_disc(F, **factor_kw)
    D, delta = fd.D, fd.D & 1
    # theta = (A + G*sqrt(D))/2 = (A - G*delta)/2 + G*omega
    if (A - G * delta) % 2:
        raise CertificateError("theta is not integral (parity)")
    theta = ((A - G * delta) // 2, G)
    f = ideal_to_form([(abs(xbase), 0), theta], D)
    if check_power and not forms.is_principal(forms.power(f, m)):
        raise CertificateError("postcondition failed: a^m is not principal")
    return MthPowerClass(
        form=f, disc=fd, conductor=G, xbase=xbase, A=A, F=F, m=m
    )
