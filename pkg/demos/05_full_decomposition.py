"""End-to-end partial fraction decompositions with verification.

Each output summand's denominator factors simultaneously share a common
zero over the algebraic closure and are algebraically independent; the
verifier re-checks those conditions and the exact recombination identity.
"""

from leinartas import (
    leinartas_decompose,
    normalize,
    parse_expression,
    render,
    verify,
)


def show(title, source, variables, factors=None):
    print("=" * 60)
    print(title)
    parsed = parse_expression(source, variables)
    supplied = None
    if factors:
        from leinartas import parse_polynomial

        supplied = [
            (parse_polynomial(text, parsed.variables), e) for text, e in factors
        ]
    dec = normalize(leinartas_decompose(parsed.expression, supplied))
    report = verify(dec)
    print(render(dec, report, "text").payload)
    print("certificates used:", len(dec.log))
    print()


# Denominator X*Y*(X*Y + 1): the three factors have no common zero, so the
# first pass splits the fraction; every surviving factor set is independent.
show(
    "two variables, zero-free factor triple",
    "(X^2*Y + X*Y^2 + X*Y + X + Y)/(X*Y*(X*Y+1))",
    ["X", "Y"],
)

# Denominator X*Y*Z*(X*Y + Z): the factors all vanish at the origin but are
# four in number in three variables, hence dependent; the second pass
# rewrites the fraction, raising the exponent of X*Y + Z to 2 along the way.
show(
    "three variables, dependent factor set",
    "(X^2*Y^2 + X^2*Y*Z + X*Y^2*Z + 2*X*Y*Z + X*Z^2 + Y*Z^2)/(X*Y*Z*(X*Y+Z))",
    ["X", "Y", "Z"],
)

# Both passes fire: the denominator needs the common-zero split first and an
# annihilator step afterwards.  Supplying the factorization keeps the linear
# factors X + Y and Y - 1 separate.
show(
    "two variables, both passes",
    "(2*X^2*Y + 4*X*Y^2 + Y^3 - X^2 - 3*X*Y - Y^2)/(X*Y*(X+Y)*(Y-1))",
    ["X", "Y"],
    factors=[("X", 1), ("Y", 1), ("X+Y", 1), ("Y-1", 1)],
)

# Fixed point: the single summand already satisfies both conditions, so the
# engine returns it unchanged.
show("already decomposed", "1/(X1*X2*X3)", ["X1", "X2", "X3"])
