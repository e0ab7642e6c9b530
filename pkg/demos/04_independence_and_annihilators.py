"""Algebraic independence and annihilating polynomials.

Independence is decided by the rank of the Jacobian matrix over the
rational-function field (characteristic zero), computed fraction-free.  A
dependent set gets an explicit witness: a nonzero polynomial in fresh
indeterminates that vanishes when the inputs are substituted.
"""

from leinartas import (
    Polynomial,
    VariableContext,
    annihilating_polynomial,
    is_algebraically_independent,
    jacobian,
)

ctx = VariableContext(["X", "Y", "Z"])
X, Y, Z = (Polynomial.variable(ctx, i) for i in range(3))

print("jacobian of [X*Y + Z]:", [[str(e) for e in row] for row in jacobian([X * Y + Z])])

# Three coordinates are independent; four polynomials in three variables
# cannot be.
print("{X, Y, Z} independent:", is_algebraically_independent([X, Y, Z]))
system = [X, Y, Z, X * Y + Z]
print("{X, Y, Z, X*Y+Z} independent:", is_algebraically_independent(system))

ann = annihilating_polynomial(system)
print("annihilator variables:", ", ".join(ann.variables.names))
print("annihilator:", ann.poly)
print("vanishes on the inputs:", ann.check())

# Powers do not change the verdict: the Jacobian rows only pick up scalar
# multiples e*q^(e-1).
powered = [X**2, Y**3, Z, (X * Y + Z) ** 2]
print("powered set independent:", is_algebraically_independent(powered))
ann2 = annihilating_polynomial(powered)
print("annihilator of the powered set:", ann2.poly)
print("vanishes:", ann2.check())

# A dependence that is not just a counting argument: X^2 and X^4.
ctx2 = VariableContext(["X", "Y"])
x = Polynomial.variable(ctx2, "X")
ann3 = annihilating_polynomial([x**2, x**4])
print("relation between X^2 and X^4:", ann3.poly)
