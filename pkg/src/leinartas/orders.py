"""Monomial orders and exponent-vector helpers.

A monomial is a bare tuple of non-negative integer exponents, one entry per
variable of the ambient context.  Every order exposes ``key``, a sort key
usable with ``max``/``sorted`` whose tuple comparison agrees with the order,
and ``compare`` returning -1/0/1.

All three orders are multiplicative total well-orderings: the constant
monomial is minimal, and a < b implies a+c < b+c.
"""

from __future__ import annotations

from typing import Sequence

Monomial = tuple[int, ...]


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """Exponents of a/b; the caller guarantees b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b, i.e. a <= b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def total_degree(a: Monomial) -> int:
    return sum(a)


def degrevlex_key(exponents: Monomial):
    # Same total degree: the monomial with the smaller exponent at the
    # rightmost differing position is the larger one.
    return (sum(exponents), tuple(-e for e in reversed(exponents)))


class MonomialOrder:
    """Base class; subclasses implement ``key``."""

    kind = "?"

    def key(self, exponents: Monomial):
        raise NotImplementedError

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != len(b):
            raise ValueError("monomials have different lengths")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class Lex(MonomialOrder):
    kind = "lex"

    def key(self, exponents: Monomial):
        return exponents

    def __eq__(self, other) -> bool:
        return isinstance(other, Lex)

    def __hash__(self) -> int:
        return hash(Lex)


class DegRevLex(MonomialOrder):
    kind = "degrevlex"

    def key(self, exponents: Monomial):
        return degrevlex_key(exponents)

    def __eq__(self, other) -> bool:
        return isinstance(other, DegRevLex)

    def __hash__(self) -> int:
        return hash(DegRevLex)


class Block(MonomialOrder):
    """Lex between two variable blocks, an inner order within each block.

    Any monomial touching the leading block compares above every monomial
    confined to the trailing block, which is what elimination needs.
    """

    kind = "block"

    def __init__(
        self,
        leading: Sequence[int],
        trailing: Sequence[int],
        leading_order: MonomialOrder | None = None,
        trailing_order: MonomialOrder | None = None,
    ):
        self.leading = tuple(leading)
        self.trailing = tuple(trailing)
        if set(self.leading) & set(self.trailing):
            raise ValueError("blocks must be disjoint")
        self.leading_order = leading_order or DEGREVLEX
        self.trailing_order = trailing_order or DEGREVLEX

    def key(self, exponents: Monomial):
        return (
            self.leading_order.key(tuple(exponents[i] for i in self.leading)),
            self.trailing_order.key(tuple(exponents[i] for i in self.trailing)),
        )

    def __repr__(self) -> str:
        return f"Block(leading={self.leading}, trailing={self.trailing})"


LEX = Lex()
DEGREVLEX = DegRevLex()


def elimination_order(num_variables: int, eliminate: Sequence[int]) -> Block:
    """Block order whose leading block is the variables to eliminate."""
    cut = sorted(set(eliminate))
    if any(i < 0 or i >= num_variables for i in cut):
        raise ValueError("eliminated index out of range")
    keep = [i for i in range(num_variables) if i not in set(cut)]
    return Block(cut, keep)


def compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1 as a is below, equal to, or above b under the order."""
    return order.compare(a, b)
