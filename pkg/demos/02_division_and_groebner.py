"""Multivariate division, reduced bases, elimination, and gcd.

The division algorithm tracks its quotients, so every reduction is an
explicit identity.  Buchberger's algorithm returns the unique reduced basis
for the chosen order, and with track=True each basis element carries
cofactors over the original generators.
"""

from leinartas import (
    LEX,
    Polynomial,
    VariableContext,
    buchberger,
    divide,
    eliminate,
    gcd,
)

ctx = VariableContext(["X", "Y"])
X = Polynomial.variable(ctx, "X")
Y = Polynomial.variable(ctx, "Y")

p = X**2 * Y + X * Y**2 + X * Y + X + Y

# Dividing by a single polynomial: p = q*(X*Y + 1) + r.
result = divide(p, [X * Y + 1])
print("p   =", p)
print("  = (", result.quotients[0], ")*(X*Y + 1) +", result.remainder)

# Division by several divisors at once; quotients line up with divisors.
result = divide(p, [X * Y, X + Y])
for q, d in zip(result.quotients, [X * Y, X + Y]):
    print("quotient", q, " for divisor ", d)
print("remainder", result.remainder)

# A reduced basis; for these generators the ideal is the whole ring.
tracked = buchberger([X, Y, X * Y + 1], track=True)
print("basis:", [str(b) for b in tracked.basis])
print("cofactors of 1:", [str(c) for c in tracked.representation[0]])

# Elimination: project the ideal onto a subset of the variables.
ctx5 = VariableContext(["X", "Y", "A", "B", "C"])
x, y, a, b, c = (Polynomial.variable(ctx5, i) for i in range(5))
members = eliminate([a - x, b - y, c - (x + y)], keep=["A", "B", "C"])
print("relation among X, Y, X+Y:", [str(m) for m in members])

# gcd via the intersection of principal ideals.
u = (X * Y + 1) * X
v = (X * Y + 1) * Y
print("gcd of", u, "and", v, "is", gcd(u, v))

# Orders matter: the same ideal has different reduced bases under lex.
print("lex basis:", [str(g) for g in buchberger([X**2 + Y, X * Y - 1], LEX).basis])
