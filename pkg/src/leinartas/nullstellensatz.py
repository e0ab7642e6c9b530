"""Common-zero decision over the algebraic closure, with certificates.

A finite set of polynomials over Q has no common zero in the algebraic
closure exactly when 1 lies in the ideal they generate.  In that case the
tracked basis computation yields cofactors h_i over Q itself with
sum(h_i * q_i) = 1, a machine-checkable witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .groebner import buchberger, ideal_contains_one
from .polynomial import Polynomial


@dataclass(frozen=True)
class NullCertificate:
    """Cofactors witnessing that the inputs have no common zero."""

    inputs: tuple[Polynomial, ...]
    cofactors: tuple[Polynomial, ...]

    def combination(self) -> Polynomial:
        total = Polynomial.zero(self.inputs[0].context)
        for h, q in zip(self.cofactors, self.inputs):
            total = total + h * q
        return total

    def check(self) -> bool:
        """True iff sum(cofactor * input) is exactly 1."""
        return self.combination().is_one


def _validate(polys) -> list[Polynomial]:
    ps = list(polys)
    if not ps:
        raise ValueError("at least one polynomial is required")
    ctx = ps[0].context
    for p in ps:
        if p.context != ctx:
            raise ValueError("polynomials live in different variable contexts")
        if p.is_zero:
            raise ValueError("the zero polynomial is not allowed here")
    return ps


def has_common_zero(polys) -> bool:
    """True iff the polynomials share a zero over the algebraic closure."""
    return not ideal_contains_one(_validate(polys))


def certificate(polys) -> NullCertificate:
    """Cofactors h_i with sum(h_i * q_i) = 1, for a zero-free system."""
    ps = _validate(polys)
    tracked = buchberger(ps, track=True)
    if not (len(tracked.basis) == 1 and tracked.basis[0].is_one):
        raise DomainError(
            "the polynomials have a common zero over the closure; "
            "1 is not in the generated ideal"
        )
    cert = NullCertificate(tuple(ps), tracked.representation[0])
    if not cert.check():  # pragma: no cover - internal invariant
        raise RuntimeError("cofactor tracking produced an invalid certificate")
    return cert
