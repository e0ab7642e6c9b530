"""Deciding common zeros over the algebraic closure, with certificates.

A system has no common zero exactly when 1 lies in its ideal; in that case
the engine returns cofactors h_i with sum(h_i * q_i) = 1, which anyone can
re-check by plain polynomial arithmetic.
"""

import random
from fractions import Fraction

from leinartas import Polynomial, VariableContext, certificate, has_common_zero

ctx = VariableContext(["X", "Y"])
X = Polynomial.variable(ctx, "X")
Y = Polynomial.variable(ctx, "Y")

# X and Y vanish only at the origin, where X*Y + 1 = 1: no common zero.
system = [X, Y, X * Y + 1]
print("common zero of {X, Y, X*Y+1}:", has_common_zero(system))

cert = certificate(system)
for h, q in zip(cert.cofactors, cert.inputs):
    print(f"  cofactor ({h})  for  ({q})")
print("identity holds:", cert.check())

# Spot-check the identity at random rational points.
rng = random.Random(0)
pts = [(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
        Fraction(rng.randint(-9, 9), rng.randint(1, 9))) for _ in range(5)]
for pt in pts:
    print(f"  sum(h_i*q_i) at {tuple(map(str, pt))} =", cert.combination().evaluate(pt))

# Dropping X*Y + 1 leaves the origin as a common zero, so no certificate
# can exist.
print("common zero of {X, Y}:", has_common_zero([X, Y]))

# Certificates are not unique; any cofactors satisfying the identity are
# accepted by the checker.
from leinartas import NullCertificate

hand_made = NullCertificate((X, Y, X * Y + 1), (-Y, Polynomial.zero(ctx), Polynomial.one(ctx)))
print("hand-made certificate (-Y, 0, 1) checks:", hand_made.check())
