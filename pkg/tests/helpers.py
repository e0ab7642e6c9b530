"""Shared test helpers.

``checked_decompose`` funnels every decomposition the suite produces through
an independent recombination check (pairwise exact fraction addition, a
different route than the verifier's common-denominator identity) and records
it for the suite-wide postcondition test.
"""

from __future__ import annotations

import random

from leinartas import (
    Decomposition,
    Polynomial,
    RationalExpression,
    VariableContext,
    leinartas_decompose,
    normalize,
    parse_polynomial,
)

RECORDED: list[Decomposition] = []


def P(ctx: VariableContext, text: str) -> Polynomial:
    return parse_polynomial(text, ctx)


def fraction_sum(dec: Decomposition) -> tuple[Polynomial, Polynomial]:
    """Add all terms as exact fractions, pairwise, with no simplification."""
    ctx = dec.original.context
    num = Polynomial.zero(ctx)
    den = Polynomial.one(ctx)
    for t in dec.terms:
        td = t.denominator(dec.denominator)
        num = num * td + t.numerator * den
        den = den * td
    return num, den


def recombines(dec: Decomposition) -> bool:
    num, den = fraction_sum(dec)
    return num * dec.original.denominator == dec.original.numerator * den


def checked_decompose(
    expression: RationalExpression,
    factors=None,
    normalized: bool = False,
) -> Decomposition:
    dec = leinartas_decompose(expression, factors)
    assert recombines(dec), "decomposition does not recombine to its input"
    RECORDED.append(dec)
    if normalized:
        dec = normalize(dec)
        assert recombines(dec), "normalization broke recombination"
        RECORDED.append(dec)
    return dec


def random_polynomial(
    rng: random.Random,
    ctx: VariableContext,
    max_degree: int = 2,
    max_terms: int = 3,
    coeff_pool=(-2, -1, 1, 2),
    nonconstant: bool = False,
) -> Polynomial:
    monos = monomials_up_to(ctx.d, max_degree)
    while True:
        terms: dict = {}
        for _ in range(rng.randint(1, max_terms)):
            m = rng.choice(monos)
            terms[m] = terms.get(m, 0) + rng.choice(coeff_pool)
        p = Polynomial(ctx, [(m, c) for m, c in terms.items() if c])
        if p.is_zero:
            continue
        if nonconstant and p.is_constant:
            continue
        return p


def monomials_up_to(d: int, degree: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, d)
    return out


def random_point(rng: random.Random, d: int):
    from fractions import Fraction

    return [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(d)]
