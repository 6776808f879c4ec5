"""m-rank lower-bound certificates on quadratic class groups.

A RankCertificate lists r form classes, each with m-th power principal, plus
the transcript showing every nontrivial exponent vector in (Z/m)^r combines
to a non-principal class.  Verification is self-contained: it recomputes
everything from the listed forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from ..errors import CertificateError
from . import forms
from .forms import FundDisc, QuadForm
from .ideals import MthPowerClass, ideal_class_from_mth_power


@dataclass
class RankCertificate:
    disc: FundDisc
    m: int
    forms: list[QuadForm]
    rank: int
    transcript: list[tuple[tuple[int, ...], bool]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "D": str(self.disc.D),
            "m": self.m,
            "rank": self.rank,
            "forms": [forms.form_to_json(f) for f in self.forms],
            "transcript": [
                [list(vec), principal] for vec, principal in self.transcript
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "RankCertificate":
        D = int(obj["D"])
        d = D if D % 4 == 1 else D // 4
        return cls(
            disc=FundDisc(D, d),
            m=int(obj["m"]),
            forms=[forms.form_from_json(f) for f in obj["forms"]],
            rank=int(obj["rank"]),
            transcript=[
                (tuple(int(x) for x in vec), bool(p))
                for vec, p in obj["transcript"]
            ],
        )


def _combo(classes: list[QuadForm], vec, D: int) -> QuadForm:
    acc = forms.reduce_form(forms.principal_form(D))
    for f, e in zip(classes, vec):
        if e:
            acc = forms.compose(acc, forms.power(f, e))
    return acc


def certify_m_rank(
    classes: list[QuadForm], m: int, *, check_precondition: bool = True
) -> RankCertificate:
    """Largest certified r: a subset of r classes with all m^r - 1 nontrivial
    combinations non-principal.  Returns rank 0 (empty transcript) when no
    class survives."""
    if m <= 1:
        raise ValueError("m must exceed 1")
    if not classes:
        return RankCertificate(disc=FundDisc(0, 0), m=m, forms=[], rank=0)
    D = classes[0].disc
    if any(f.disc != D for f in classes):
        raise ValueError("classes live at different discriminants")
    if check_precondition:
        for f in classes:
            forms.verify_certificate_precondition(f, m)
    fd = FundDisc(D, D if D % 4 == 1 else D // 4)
    for r in range(len(classes), 0, -1):
        for subset in combinations(classes, r):
            transcript = []
            ok = True
            for vec in product(range(m), repeat=r):
                if not any(vec):
                    continue
                principal = forms.is_principal(_combo(list(subset), vec, D))
                transcript.append((vec, principal))
                if principal:
                    ok = False
                    break
            if ok:
                return RankCertificate(
                    disc=fd, m=m, forms=list(subset), rank=r,
                    transcript=transcript,
                )
    return RankCertificate(disc=fd, m=m, forms=[], rank=0)


def verify_rank_certificate(cert: RankCertificate) -> bool:
    """Re-verify a certificate from scratch (forms only; transcript recheck)."""
    try:
        for f in cert.forms:
            if f.disc != cert.disc.D:
                return False
            forms.verify_certificate_precondition(f, cert.m)
    except CertificateError:
        return False
    if len(cert.forms) != cert.rank:
        return False
    for vec in product(range(cert.m), repeat=cert.rank):
        if not any(vec):
            continue
        if forms.is_principal(_combo(cert.forms, vec, cert.disc.D)):
            return False
    return True


def narrow_torsion_class(
    xbase: int, A: int, F: int, m: int, **factor_kw
) -> MthPowerClass:
    """m-torsion class candidate from the (xbase, A, F) certificate datum.

    For F > 0 the ideal power (theta) may land in the narrow sign class; m
    odd lets us square the class, which fixes the sign and is injective on
    odd torsion.  Even m with F > 0 is refused (narrow/wide ambiguity).
    """
    cls = ideal_class_from_mth_power(xbase, A, F, m, check_power=False, **factor_kw)
    if forms.is_principal(forms.power(cls.form, m)):
        return cls
    if F < 0 or m % 2 == 0:
        raise CertificateError("class is not m-torsion (and squaring unavailable)")
    sq = forms.compose(cls.form, cls.form)
    if not forms.is_principal(forms.power(sq, m)):
        raise CertificateError("squared class is still not m-torsion")
    return MthPowerClass(
        form=sq, disc=cls.disc, conductor=cls.conductor,
        xbase=xbase, A=A, F=F, m=m,
    )
