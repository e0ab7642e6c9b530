"""Shared exception types.

Programming mistakes (mismatched contexts, zero divisors, bad indices) raise
plain ``ValueError``.  The classes below mark the two conditions the
command-line driver must tell apart: malformed input text versus inputs that
are syntactically fine but mathematically out of domain.
"""


class ParseError(ValueError):
    """Malformed expression text.  ``position`` is a 0-based source offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(ArithmeticError):
    """Mathematically inadmissible input: zero denominator, factor product
    mismatch, certificate requested for a system with a common zero, or an
    annihilator requested for an independent set."""
