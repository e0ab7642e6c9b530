"""Multivariate division, Buchberger's algorithm, elimination ideals, gcd.

The basis computation keeps every element monic, prunes S-pairs with the
standard coprime-lead and chain criteria (Gebauer-Moeller update), selects
pairs by smallest lcm under the active order, and fully inter-reduces the
result, so the returned basis is the unique reduced basis for the ideal and
order.  With ``track=True`` every basis element carries cofactors expressing
it as an explicit combination of the input generators; the tracking survives
S-polynomial formation, reduction and inter-reduction.

As soon as a constant enters the basis the ideal is the whole ring, so the
computation stops early and returns the reduced basis {1} (with its tracked
representation when requested).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .orders import (
    DEGREVLEX,
    Block,
    Monomial,
    MonomialOrder,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)
from .polynomial import Polynomial, VariableContext

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass(frozen=True)
class DivisionResult:
    """Quotients (one per divisor) and remainder with
    dividend = sum(quotient*divisor) + remainder and no remainder term
    divisible by any divisor's leading monomial."""

    quotients: tuple[Polynomial, ...]
    remainder: Polynomial


@dataclass(frozen=True)
class TrackedBasis:
    """A reduced basis, optionally with cofactors over the generators.

    When present, ``representation[j]`` holds one cofactor per generator,
    and ``basis[j] == sum(representation[j][k] * generators[k])`` exactly.
    """

    generators: tuple[Polynomial, ...]
    basis: tuple[Polynomial, ...]
    representation: tuple[tuple[Polynomial, ...], ...] | None = None


def _addmul_into(dst: dict, src: dict, shift: Monomial, factor: Fraction) -> None:
    """dst += factor * X^shift * src, dropping cancellations."""
    for m, c in src.items():
        mm = monomial_mul(m, shift)
        v = dst.get(mm, _F0) + factor * c
        if v:
            dst[mm] = v
        else:
            del dst[mm]


def _divide_core(dividend, divisors, leads, lead_coeffs, key, collect):
    """Division against an ordered divisor list; always takes the first
    divisor whose leading monomial divides the current leading term."""
    p = dict(dividend)
    quotients = [{} for _ in divisors] if collect else None
    remainder: dict[Monomial, Fraction] = {}
    while p:
        lm = max(p, key=key)
        lc = p[lm]
        for i, dm in enumerate(leads):
            if monomial_divides(dm, lm):
                shift = monomial_div(lm, dm)
                c = lc / lead_coeffs[i]
                if collect:
                    quotients[i][shift] = quotients[i].get(shift, _F0) + c
                _addmul_into(p, divisors[i], shift, -c)
                break
        else:
            remainder[lm] = lc
            del p[lm]
    return quotients, remainder


def divide(
    dividend: Polynomial,
    divisors,
    order: MonomialOrder = DEGREVLEX,
) -> DivisionResult:
    """Multivariate division with quotient tracking."""
    divs = list(divisors)
    if not divs:
        raise ValueError("at least one divisor is required")
    ctx = dividend.context
    for d in divs:
        if d.context != ctx:
            raise ValueError("dividend and divisors live in different contexts")
        if d.is_zero:
            raise ValueError("cannot divide by the zero polynomial")
    key = order.key
    leads = [d.leading_monomial(order) for d in divs]
    lead_coeffs = [d.coefficient_map[m] for d, m in zip(divs, leads)]
    quotients, remainder = _divide_core(
        dividend.coefficient_map,
        [d.coefficient_map for d in divs],
        leads,
        lead_coeffs,
        key,
        collect=True,
    )
    return DivisionResult(
        tuple(Polynomial._raw(ctx, q) for q in quotients),
        Polynomial._raw(ctx, remainder),
    )


def exact_divide(dividend: Polynomial, divisor: Polynomial) -> Polynomial:
    """Single-divisor division that must leave no remainder."""
    result = divide(dividend, [divisor])
    if not result.remainder.is_zero:
        raise ValueError("division is not exact")
    return result.quotients[0]


def buchberger(
    generators,
    order: MonomialOrder = DEGREVLEX,
    track: bool = False,
) -> TrackedBasis:
    """Reduced Groebner basis, optionally with generator cofactors."""
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    ctx = gens[0].context
    for g in gens:
        if g.context != ctx:
            raise ValueError("generators live in different contexts")
        if g.is_zero:
            raise ValueError("generators must be nonzero")

    key = order.key
    n = len(gens)
    zero_mono = (0,) * ctx.d

    basis: list[dict] = []
    leads: list[Monomial] = []
    reps: list[list[dict]] = []
    pairs: set[tuple[int, int]] = set()
    unit_rep: list[dict] | None = None

    def add(pdict: dict, prep: list[dict] | None) -> bool:
        """Monic-normalize, update the pair set a la Gebauer-Moeller, append.
        Returns True when the new element is a constant (unit ideal)."""
        nonlocal pairs, unit_rep
        lm = max(pdict, key=key)
        lc = pdict[lm]
        if lc != 1:
            inv = 1 / lc
            pdict = {m: c * inv for m, c in pdict.items()}
            if prep is not None:
                prep = [{m: c * inv for m, c in r.items()} for r in prep]
        t = len(basis)
        # Chain criterion: drop old pairs whose lcm the new lead refines.
        kept = set()
        for i, j in pairs:
            lij = monomial_lcm(leads[i], leads[j])
            if (
                not monomial_divides(lm, lij)
                or lij == monomial_lcm(leads[i], lm)
                or lij == monomial_lcm(leads[j], lm)
            ):
                kept.add((i, j))
        # Minimalize the new pairs' lcms, then apply the coprime criterion.
        groups: dict[Monomial, list[int]] = {}
        for i in range(t):
            groups.setdefault(monomial_lcm(leads[i], lm), []).append(i)
        minimal: list[Monomial] = []
        for lcm_m in sorted(groups, key=key):
            if all(not monomial_divides(m, lcm_m) for m in minimal):
                minimal.append(lcm_m)
        fresh = set()
        for lcm_m in minimal:
            if not any(
                monomial_lcm(leads[i], lm) == monomial_mul(leads[i], lm)
                for i in groups[lcm_m]
            ):
                fresh.add((min(groups[lcm_m]), t))
        pairs = kept | fresh
        basis.append(pdict)
        leads.append(lm)
        if prep is not None:
            reps.append(prep)
        if lm == zero_mono:
            unit_rep = prep
            return True
        return False

    found_unit = False
    for idx, g in enumerate(gens):
        prep = None
        if track:
            prep = [{} for _ in range(n)]
            prep[idx][zero_mono] = _F1
        if add(dict(g.coefficient_map), prep):
            found_unit = True
            break

    while pairs and not found_unit:
        i, j = min(
            pairs,
            key=lambda ij: (key(monomial_lcm(leads[ij[0]], leads[ij[1]])), ij),
        )
        pairs.discard((i, j))
        lcm_m = monomial_lcm(leads[i], leads[j])
        ti = monomial_div(lcm_m, leads[i])
        tj = monomial_div(lcm_m, leads[j])
        s: dict = {}
        _addmul_into(s, basis[i], ti, _F1)
        _addmul_into(s, basis[j], tj, -_F1)
        srep = None
        if track:
            srep = [{} for _ in range(n)]
            for k in range(n):
                _addmul_into(srep[k], reps[i][k], ti, _F1)
                _addmul_into(srep[k], reps[j][k], tj, -_F1)
        if not s:
            continue
        quotients, remainder = _divide_core(
            s, basis, leads, [_F1] * len(basis), key, collect=track
        )
        if track:
            for b, q in enumerate(quotients):
                for shift, c in q.items():
                    for k in range(n):
                        _addmul_into(srep[k], reps[b][k], shift, -c)
        if remainder:
            if add(remainder, srep):
                found_unit = True

    if found_unit:
        representation = None
        if track:
            representation = (
                tuple(Polynomial._raw(ctx, dict(r)) for r in unit_rep),
            )
        return TrackedBasis(tuple(gens), (Polynomial.one(ctx),), representation)

    # Minimal basis: keep only elements whose lead no other kept lead divides.
    kept_idx: list[int] = []
    for i in sorted(range(len(basis)), key=lambda i: (key(leads[i]), i)):
        if not any(monomial_divides(leads[k], leads[i]) for k in kept_idx):
            kept_idx.append(i)
    final = [dict(basis[i]) for i in kept_idx]
    fleads = [leads[i] for i in kept_idx]
    freps = [[dict(r) for r in reps[i]] for i in kept_idx] if track else None

    # Inter-reduce tails; pairwise non-divisible leads stay untouched, so one
    # pass leaves every element reduced against the final set.
    for a in range(len(final)):
        other_idx = [b for b in range(len(final)) if b != a]
        quotients, remainder = _divide_core(
            final[a],
            [final[b] for b in other_idx],
            [fleads[b] for b in other_idx],
            [_F1] * len(other_idx),
            key,
            collect=track,
        )
        if track:
            for pos, q in zip(other_idx, quotients):
                for shift, c in q.items():
                    for k in range(n):
                        _addmul_into(freps[a][k], freps[pos][k], shift, -c)
        final[a] = remainder

    by_lead = sorted(range(len(final)), key=lambda i: key(fleads[i]), reverse=True)
    basis_polys = tuple(Polynomial._raw(ctx, final[i]) for i in by_lead)
    representation = None
    if track:
        representation = tuple(
            tuple(Polynomial._raw(ctx, dict(r)) for r in freps[i]) for i in by_lead
        )
    return TrackedBasis(tuple(gens), basis_polys, representation)


def ideal_contains_one(generators, order: MonomialOrder = DEGREVLEX) -> bool:
    """True iff the reduced basis of the generated ideal is {1}."""
    basis = buchberger(generators, order).basis
    return len(basis) == 1 and basis[0].is_one


def _resolve_indices(context: VariableContext, variables) -> list[int]:
    out = []
    for v in variables:
        i = context.index(v) if isinstance(v, str) else int(v)
        if not 0 <= i < context.d:
            raise ValueError(f"variable index {i} out of range")
        out.append(i)
    return sorted(set(out))


def eliminate(generators, keep) -> list[Polynomial]:
    """Basis of the elimination ideal onto the kept variables.

    Runs Buchberger under a block order whose leading block is the
    complement of ``keep`` and returns the reduced-basis members involving
    only kept variables.  ``keep`` may list names or indices.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    ctx = gens[0].context
    keep_idx = _resolve_indices(ctx, keep)
    drop_idx = [i for i in range(ctx.d) if i not in set(keep_idx)]
    order = Block(drop_idx, keep_idx)
    basis = buchberger(gens, order).basis
    out = []
    for b in basis:
        if all(all(m[i] == 0 for i in drop_idx) for m in b.coefficient_map):
            out.append(b)
    return out


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor via the ideal intersection <a> & <b>.

    The intersection is computed by eliminating one auxiliary variable t
    from <t*a, (1-t)*b>; its single reduced generator is lcm(a, b), and
    a*b divided exactly by it is the gcd.
    """
    if a.context != b.context:
        raise ValueError("polynomials live in different variable contexts")
    ctx = a.context
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.is_constant or b.is_constant:
        return Polynomial.one(ctx)
    aux = "_t"
    while aux in ctx.names:
        aux = "_" + aux
    ext = VariableContext((aux,) + ctx.names)
    positions = tuple(range(1, ctx.d + 1))
    t = Polynomial.variable(ext, 0)
    gens = [t * a.embed(ext, positions), (1 - t) * b.embed(ext, positions)]
    members = eliminate(gens, keep=positions)
    if len(members) != 1:
        raise RuntimeError("intersection of principal ideals is not principal")
    lcm_poly = members[0].restrict(ctx, positions)
    return exact_divide(a * b, lcm_poly).monic()
