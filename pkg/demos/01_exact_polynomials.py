"""Tour of the exact polynomial layer.

Everything is over Q with arbitrary precision: coefficients are
fractions.Fraction, terms are kept in canonical sorted form, and every
operation is a pure function on immutable values.
"""

from fractions import Fraction

from leinartas import Polynomial, VariableContext, canonicalize

# A context fixes the variables and their order; the order also fixes the
# canonical term order used for printing and equality.
ctx = VariableContext(["X", "Y"])
X = Polynomial.variable(ctx, "X")
Y = Polynomial.variable(ctx, "Y")

p = X**2 * Y + X * Y**2 + X * Y + X + Y
print("p =", p)
print("p has", len(p), "terms, total degree", p.total_degree())

# Arithmetic is exact; no floating point anywhere.
q = (X + Y) * (X - Y)
print("(X + Y)*(X - Y) =", q)
print("equal to X^2 - Y^2:", q == X**2 - Y**2)

# Rational coefficients stay exact through any computation.
r = Fraction(1, 3) * X + Fraction(1, 6) * X
print("X/3 + X/6 =", r)

# Evaluation plugs in rational points.
print("p(1, 1) =", p.evaluate((1, 1)))
print("p(2, -1/2) =", p.evaluate((2, Fraction(-1, 2))))

# Formal partial derivatives.
print("dp/dX =", p.derivative("X"))
print("dp/dY =", p.derivative("Y"))

# canonicalize merges duplicate monomials, drops zeros, and sorts.
messy = [((1, 1), 5), ((1, 1), -5), ((0, 1), 2), ((1, 0), 3)]
print("canonicalized:", canonicalize(messy, ctx))

# Composition substitutes polynomials for variables.
g = canonicalize([((1, 1), 1), ((0, 0), -1)], ctx)  # X*Y - 1
print("g(X+Y, X-Y) =", g.compose([X + Y, X - Y]))
