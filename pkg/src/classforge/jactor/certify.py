"""Torsion-rank certificates on Jacobians mod p.

A TorsionCertificate lists divisor classes killed by m on a good-reduction
curve over F_p, with a transcript showing all nontrivial exponent vectors
combine to nonzero classes - hence a subgroup of size m^r.  Torsion injects
under good reduction at odd primes, so the rank is evidence for the
characteristic-zero claim whenever the defining identities hold over Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from ..errors import CertificateError, ClassforgeError
from .curve import HyperCurve, curve_from_json, curve_to_json
from .mumford import (
    MumfordDivisor,
    cantor_add,
    identity_divisor,
    is_identity,
    scalar_mul,
)


@dataclass
class TorsionCertificate:
    curve: HyperCurve
    m: int
    divisors: list[MumfordDivisor]
    rank: int
    transcript: list[tuple[tuple[int, ...], bool]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "p": self.curve.p,
            "f": [str(c) for c in self.curve.f],
            "m": self.m,
            "rank": self.rank,
            "divisors": [
                [[str(c) for c in D.u], [str(c) for c in D.v]]
                for D in self.divisors
            ],
            "transcript": [
                [list(vec), trivial] for vec, trivial in self.transcript
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "TorsionCertificate":
        C = curve_from_json({"base": obj["p"], "f": obj["f"]})
        divisors = [
            MumfordDivisor(
                tuple(int(c) % C.p for c in u), tuple(int(c) % C.p for c in v)
            )
            for u, v in obj["divisors"]
        ]
        return cls(
            curve=C,
            m=int(obj["m"]),
            divisors=divisors,
            rank=int(obj["rank"]),
            transcript=[
                (tuple(int(x) for x in vec), bool(t))
                for vec, t in obj["transcript"]
            ],
        )


def _combo(C, divs, vec) -> MumfordDivisor:
    acc = identity_divisor(C)
    for D, e in zip(divs, vec):
        if e:
            acc = cantor_add(C, acc, scalar_mul(C, e, D))
    return acc


def certify_torsion_rank(
    C: HyperCurve, divs: list[MumfordDivisor], m: int
) -> TorsionCertificate:
    """Largest r with r of the classes generating a subgroup of size m^r.

    Preconditions checked here: each class is killed by m; p odd.  The
    returned transcript covers all m^r - 1 nontrivial vectors of the
    winning subset."""
    if C.p is None:
        raise ClassforgeError("torsion certificates are computed mod p")
    for D in divs:
        if not is_identity(scalar_mul(C, m, D)):
            raise CertificateError(f"class {D} is not killed by {m}")
    for r in range(len(divs), 0, -1):
        for subset in combinations(divs, r):
            transcript = []
            ok = True
            for vec in product(range(m), repeat=r):
                if not any(vec):
                    continue
                trivial = is_identity(_combo(C, list(subset), vec))
                transcript.append((vec, trivial))
                if trivial:
                    ok = False
                    break
            if ok:
                return TorsionCertificate(
                    curve=C, m=m, divisors=list(subset), rank=r,
                    transcript=transcript,
                )
    return TorsionCertificate(curve=C, m=m, divisors=[], rank=0)


def verify_torsion_certificate(cert: TorsionCertificate) -> bool:
    """Self-contained recheck: divisor validity, m-torsion, independence."""
    C = cert.curve
    try:
        from .mumford import mumford

        for D in cert.divisors:
            mumford(C, list(D.u), list(D.v))
            if not is_identity(scalar_mul(C, cert.m, D)):
                return False
    except (CertificateError, ClassforgeError):
        return False
    if len(cert.divisors) != cert.rank:
        return False
    for vec in product(range(cert.m), repeat=cert.rank):
        if not any(vec):
            continue
        if is_identity(_combo(C, cert.divisors, vec)):
            return False
    return True
