"""Algebraic dependence: Jacobian rank test and annihilating polynomials.

In characteristic zero, polynomials q_1..q_m are algebraically independent
iff their m x d Jacobian has rank m over the rational-function field.  Rank
is decided by fraction-free elimination on the polynomial entries: only
zero-testing of pivots matters, so no rational-function arithmetic is ever
needed.  For a dependent set, any member of the elimination ideal
<Y_1 - q_1, ..., Y_m - q_m> restricted to the Y variables annihilates the
inputs; the basis member returned is chosen deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from .errors import DomainError
from .groebner import eliminate
from .orders import Monomial
from .polynomial import Polynomial, VariableContext


@dataclass(frozen=True)
class Annihilator:
    """A nonzero polynomial in fresh indeterminates vanishing on the inputs."""

    inputs: tuple[Polynomial, ...]
    variables: VariableContext
    poly: Polynomial

    @property
    def support(self) -> tuple[Monomial, ...]:
        """Exponent vectors with nonzero coefficient."""
        return tuple(m for m, _ in self.poly.terms)

    def coefficient(self, exponents: Monomial) -> Fraction:
        return self.poly.coefficient(exponents)

    def check(self) -> bool:
        """True iff substituting the inputs yields the zero polynomial."""
        return self.poly.compose(self.inputs).is_zero


def jacobian(polys) -> list[list[Polynomial]]:
    """Matrix of partial derivatives; entry (i, j) is d(polys[i])/d(X_j)."""
    ps = list(polys)
    return [[p.derivative(j) for j in range(p.context.d)] for p in ps]


def _strip_content(p: Polynomial) -> Polynomial:
    # Divide out the rational content to keep elimination entries small.
    if p.is_zero:
        return p
    nums = [c.numerator for c in p.coefficient_map.values()]
    dens = [c.denominator for c in p.coefficient_map.values()]
    g = 0
    for v in nums:
        g = int_gcd(g, v)
    l = 1
    for v in dens:
        l = l * v // int_gcd(l, v)
    return p * Fraction(l, g)


def _matrix_rank(rows: list[list[Polynomial]]) -> int:
    """Fraction-free elimination rank over the rational-function field.

    Pivots on the structurally smallest nonzero entry (fewest terms, then
    lowest total degree) to limit expression swell.
    """
    rows = [list(r) for r in rows]
    ncols = len(rows[0]) if rows else 0
    active_rows = list(range(len(rows)))
    active_cols = list(range(ncols))
    rank = 0
    while active_rows and active_cols:
        best = None
        for r in active_rows:
            for c in active_cols:
                e = rows[r][c]
                if e.is_zero:
                    continue
                measure = (len(e), e.total_degree(), r, c)
                if best is None or measure < best[0]:
                    best = (measure, r, c)
        if best is None:
            break
        _, pr, pc = best
        rank += 1
        pivot = rows[pr][pc]
        for r in active_rows:
            if r == pr or rows[r][pc].is_zero:
                continue
            factor = rows[r][pc]
            rows[r] = [
                _strip_content(pivot * rows[r][c] - factor * rows[pr][c])
                for c in range(ncols)
            ]
        active_rows.remove(pr)
        active_cols.remove(pc)
    return rank


def is_algebraically_independent(polys) -> bool:
    """Jacobian-criterion independence test.

    Any set larger than the number of variables is dependent outright.
    Constants are trivially dependent and are rejected as a usage error.
    """
    ps = list(polys)
    if not ps:
        raise ValueError("at least one polynomial is required")
    ctx = ps[0].context
    for p in ps:
        if p.context != ctx:
            raise ValueError("polynomials live in different variable contexts")
        if p.is_zero or p.is_constant:
            raise ValueError("constant polynomials are not allowed here")
    if len(ps) > ctx.d:
        return False
    return _matrix_rank(jacobian(ps)) == len(ps)


def _fresh_names(count: int, taken) -> tuple[str, ...]:
    names = []
    taken = set(taken)
    for i in range(1, count + 1):
        name = f"Y{i}"
        while name in taken:
            name = "_" + name
        taken.add(name)
        names.append(name)
    return tuple(names)


def annihilating_polynomial(polys) -> Annihilator:
    """A deterministic annihilator for a dependent set.

    Builds <Y_i - q_i> in the combined ring, eliminates the original
    variables, and among the surviving basis members picks the one of
    minimal total degree, then fewest terms, then smallest canonical key.
    """
    ps = list(polys)
    if not ps:
        raise ValueError("at least one polynomial is required")
    ctx = ps[0].context
    m = len(ps)
    ynames = _fresh_names(m, ctx.names)
    combined = VariableContext(ctx.names + ynames)
    xpos = tuple(range(ctx.d))
    gens = []
    for i, q in enumerate(ps):
        y = Polynomial.variable(combined, ctx.d + i)
        gens.append(y - q.embed(combined, xpos))
    members = eliminate(gens, keep=range(ctx.d, ctx.d + m))
    if not members:
        raise DomainError("the polynomials are algebraically independent")
    yctx = VariableContext(ynames)
    ypos = tuple(range(ctx.d, ctx.d + m))
    candidates = [g.restrict(yctx, ypos) for g in members]
    candidates.sort(key=lambda g: (g.total_degree(), len(g), g.sort_key()))
    ann = Annihilator(tuple(ps), yctx, candidates[0])
    if not ann.check():  # pragma: no cover - internal invariant
        raise RuntimeError("elimination produced a non-annihilating polynomial")
    return ann
