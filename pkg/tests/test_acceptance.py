"""Acceptance suite.

One test per criterion, run in order; each prints a PASS line with its
elapsed time (visible with ``pytest -s``) and enforces the stated time
budget.  All mathematical checks are exact, zero tolerance.
"""

import itertools
import random
import time
from fractions import Fraction

from leinartas import (
    Annihilator,
    Decomposition,
    DecompositionTerm,
    NullCertificate,
    Polynomial,
    RationalExpression,
    VariableContext,
    annihilating_polynomial,
    certificate,
    coprime_refine,
    has_common_zero,
    is_algebraically_independent,
    leinartas_decompose,
    normalize,
    parse_expression,
    verify,
)
from helpers import (
    P,
    RECORDED,
    checked_decompose,
    monomials_up_to,
    random_polynomial,
    recombines,
)
from oracles import MembershipOracle, echelon_insert, univariate_partial_fractions

XY = VariableContext(["X", "Y"])
X = Polynomial.variable(XY, "X")
Y = Polynomial.variable(XY, "Y")

EXPR1 = "(X^2*Y + X*Y^2 + X*Y + X + Y)/(X*Y*(X*Y+1))"
EXPR2 = "(X^2*Y^2 + X^2*Y*Z + X*Y^2*Z + 2*X*Y*Z + X*Z^2 + Y*Z^2)/(X*Y*Z*(X*Y+Z))"
EXPR3 = "(2*X^2*Y + 4*X*Y^2 + Y^3 - X^2 - 3*X*Y - Y^2)/(X*Y*(X+Y)*(Y-1))"


def _passed(number: int, elapsed: float, budget: float, detail: str) -> None:
    assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s (budget {budget}s)"
    print(f"ACCEPTANCE {number}: PASS ({elapsed:.2f}s < {budget:g}s) {detail}")


def test_criterion_01_first_input_end_to_end():
    start = time.perf_counter()
    f = parse_expression(EXPR1, ["X", "Y"]).expression
    dec = checked_decompose(f, normalized=True)
    assert verify(normalize(dec)).overall

    factored, _ = coprime_refine([(X, 1), (Y, 1), (X * Y + 1, 1)])
    assert factored.factors == ((X, 1), (Y, 1), (X * Y + 1, 1))
    one = Polynomial.one(XY)
    displayed_a = Decomposition(
        f,
        factored,
        (
            DecompositionTerm(one, ((2, 1),)),
            DecompositionTerm(X + Y, ((0, 1), (1, 1))),
        ),
    )
    displayed_b = Decomposition(
        f,
        factored,
        tuple(DecompositionTerm(one, ((i, 1),)) for i in range(3)),
    )
    assert verify(displayed_a).overall
    assert verify(displayed_b).overall
    _passed(1, time.perf_counter() - start, 1.0,
            "two-variable input decomposes and both manual decompositions verify")


def test_criterion_02_second_input_end_to_end():
    start = time.perf_counter()
    parsed = parse_expression(EXPR2, ["X", "Y", "Z"])
    f = parsed.expression
    ctx = parsed.variables
    dec = checked_decompose(f, normalized=True)
    assert verify(normalize(dec)).overall
    for t in dec.terms:
        assert len(t.denominator_part) <= 3

    # the manual decomposition p/(Z*(XY+Z)^2) + p/(X*Y*(XY+Z)^2) verifies and
    # shows an exponent strictly above the input's exponent on its factor
    factored, _ = coprime_refine(
        [
            (Polynomial.variable(ctx, 0), 1),
            (Polynomial.variable(ctx, 1), 1),
            (Polynomial.variable(ctx, 2), 1),
            (P(ctx, "X*Y + Z"), 1),
        ]
    )
    p = f.numerator
    manual = Decomposition(
        f,
        factored,
        (
            DecompositionTerm(p, ((2, 1), (3, 2))),
            DecompositionTerm(p, ((0, 1), (1, 1), (3, 2))),
        ),
    )
    report = verify(manual)
    assert report.overall
    input_exponents = {i: e for i, (_, e) in enumerate(factored.factors)}
    assert any(
        b > input_exponents[i]
        for t in manual.terms
        for i, b in t.denominator_part
    )
    _passed(2, time.perf_counter() - start, 5.0,
            "three-variable input decomposes; raised exponent appears in the manual form")


def test_criterion_03_third_input_two_stage():
    start = time.perf_counter()
    f = parse_expression(EXPR3, ["X", "Y"]).expression
    dec = checked_decompose(
        f, factors=[(X, 1), (Y, 1), (X + Y, 1), (Y - 1, 1)], normalized=True
    )
    assert verify(normalize(dec)).overall
    assert any(isinstance(r, NullCertificate) for r in dec.log)
    assert any(isinstance(r, Annihilator) for r in dec.log)

    # printed certificate: 1 = 0*(X) + 1*(Y) + 0*(X + Y) - 1*(Y - 1)
    zero, one = Polynomial.zero(XY), Polynomial.one(XY)
    printed = NullCertificate((X, Y, X + Y, Y - 1), (zero, one, zero, -one))
    assert printed.check()

    # printed annihilator for (X, Y, X + Y): first + second - third
    yctx = VariableContext(["A", "B", "C"])
    a, b, c = (Polynomial.variable(yctx, i) for i in range(3))
    printed_ann = Annihilator((X, Y, X + Y), yctx, a + b - c)
    assert printed_ann.check()
    _passed(3, time.perf_counter() - start, 5.0,
            "two-stage decomposition verifies; printed certificate and annihilator check")


def test_criterion_04_certificate_suite():
    start = time.perf_counter()
    rng = random.Random(40404)
    produced = 0
    while produced < 100:
        d = rng.choice([1, 2, 3])
        ctx = VariableContext([f"X{i + 1}" for i in range(d)])
        polys = [
            random_polynomial(rng, ctx, max_degree=2, max_terms=3, nonconstant=True)
            for _ in range(d + 1)
        ]
        if has_common_zero(polys):
            continue
        cert = certificate(polys)
        combined = Polynomial.zero(ctx)
        for h, q in zip(cert.cofactors, cert.inputs):
            combined = combined + h * q
        assert combined == Polynomial.one(ctx)
        produced += 1
    _passed(4, time.perf_counter() - start, 60.0,
            "100 randomized zero-free systems all carry exact certificates")


def test_criterion_05_annihilator_suite():
    start = time.perf_counter()
    rng = random.Random(50505)
    for _ in range(50):
        d = rng.choice([1, 2])
        ctx = VariableContext([f"X{i + 1}" for i in range(d)])
        polys = [
            random_polynomial(rng, ctx, max_degree=2, max_terms=2, nonconstant=True)
            for _ in range(d + 1)
        ]
        ann = annihilating_polynomial(polys)
        assert ann.poly.compose(tuple(polys)).is_zero
    _passed(5, time.perf_counter() - start, 120.0,
            "50 randomized dependent sets all annihilate exactly under substitution")


def test_criterion_06_powers_property():
    start = time.perf_counter()
    rng = random.Random(60606)
    for _ in range(50):
        d = rng.choice([1, 2, 3])
        ctx = VariableContext([f"X{i + 1}" for i in range(d)])
        m = rng.randint(1, d + 1)
        polys = [
            random_polynomial(rng, ctx, max_degree=2, max_terms=2, nonconstant=True)
            for _ in range(m)
        ]
        exponents = [rng.choice([1, 2, 3]) for _ in polys]
        powered = [p**e for p, e in zip(polys, exponents)]
        assert is_algebraically_independent(polys) == is_algebraically_independent(
            powered
        )
    _passed(6, time.perf_counter() - start, 120.0,
            "independence verdicts agree between bases and their powers (50 sets)")


def test_criterion_07_univariate_oracle():
    start = time.perf_counter()
    rng = random.Random(70707)
    U = VariableContext(["X"])
    x = Polynomial.variable(U, 0)
    for _ in range(50):
        n = rng.randint(2, 4)
        roots: list[Fraction] = []
        while len(roots) < n:
            a = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            if a not in roots:
                roots.append(a)
        denominator = Polynomial.one(U)
        for a in roots:
            denominator = denominator * (x - a)
        numerator = Polynomial(U, [((k,), rng.randint(-6, 6)) for k in range(n)])
        if numerator.is_zero:
            numerator = Polynomial.one(U)
        f = RationalExpression(numerator, denominator)
        dec = normalize(checked_decompose(f, factors=[(x - a, 1) for a in roots]))
        engine = []
        for t in dec.terms:
            assert len(t.denominator_part) == 1, "proper fraction has no polynomial part"
            idx, e = t.denominator_part[0]
            assert e == 1
            root = -dec.denominator.factors[idx][0].coefficient((0,))
            engine.append((root, t.numerator.constant_value()))
        expected = [
            (a, c) for a, c in univariate_partial_fractions(numerator, roots).items() if c
        ]
        assert sorted(engine) == sorted(expected)
    _passed(7, time.perf_counter() - start, 30.0,
            "50 univariate inputs match the linear-algebra partial fractions exactly")


def test_criterion_08_fixed_point():
    start = time.perf_counter()
    ctx = VariableContext(["X1", "X2", "X3"])
    xs = [Polynomial.variable(ctx, i) for i in range(3)]
    f = RationalExpression(Polynomial.one(ctx), xs[0] * xs[1] * xs[2])
    dec = checked_decompose(f)
    assert len(dec.terms) == 1
    term = dec.terms[0]
    assert term.numerator == 1
    assert term.denominator_part == ((0, 1), (1, 1), (2, 1))
    assert normalize(dec).terms == dec.terms
    _passed(8, time.perf_counter() - start, 1.0,
            "1/(X1*X2*X3) is returned unchanged as a single term")


def test_criterion_09_recombination_universality():
    start = time.perf_counter()
    # a fresh batch in case this criterion runs in isolation
    for source, names in ((EXPR1, ["X", "Y"]), (EXPR2, ["X", "Y", "Z"]), (EXPR3, ["X", "Y"])):
        checked_decompose(parse_expression(source, names).expression, normalized=True)
    assert RECORDED, "no decompositions were recorded by the suite"
    for dec in RECORDED:
        assert recombines(dec)
    _passed(9, time.perf_counter() - start, 120.0,
            f"all {len(RECORDED)} recorded decompositions recombine exactly")


def test_criterion_10_membership_matches_bounded_search():
    start = time.perf_counter()
    ctx = VariableContext(["X", "Y"])
    monomials = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    # Scaling a generator by a nonzero constant changes neither the ideal nor
    # the bounded search, so enumerate one sign representative per line.
    representatives = []
    for coeffs in itertools.product((-1, 0, 1), repeat=6):
        first = next((c for c in coeffs if c), None)
        if first == 1:
            representatives.append(
                Polynomial(ctx, [(m, c) for m, c in zip(monomials, coeffs) if c])
            )
    assert len(representatives) == (3**6 - 1) // 2

    oracle = MembershipOracle(d=2, cofactor_bound=4, generator_max_degree=2)
    echelons = [oracle.echelon_for(p) for p in representatives]

    checked = 0
    for p, ech in zip(representatives, echelons):
        assert has_common_zero([p]) == (0 not in ech)
        checked += 1
    n = len(representatives)
    for i in range(n):
        base = echelons[i]
        for j in range(i + 1, n):
            pivots = dict(base)
            for row in echelons[j].values():
                echelon_insert(pivots, dict(row))
            assert has_common_zero([representatives[i], representatives[j]]) == (
                0 not in pivots
            )
            checked += 1
    _passed(10, time.perf_counter() - start, 120.0,
            f"{checked} exhaustively enumerated systems agree with the degree-4 search")
