"""Two-pass partial fraction decomposition, normalization and verification.

Pass 1 splits a fraction until every summand's denominator factors share a
common zero over the algebraic closure: whenever they do not, a certificate
1 = sum(h_i * q_i^e_i) rewrites the fraction as a sum over proper subsets of
the factor set.  Pass 2 then splits each summand until its factor set is
algebraically independent: an annihilating polynomial for the powered
factors, pivoted on a support element of smallest norm, rewrites the
fraction so at least one factor cancels from every new denominator.  Both
recursions strictly shrink the active factor set, and every certificate used
is recorded in the decomposition's log.

The verifier is purely structural: exact recombination over a common
denominator plus the per-term common-zero, independence and size conditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algdep import Annihilator, annihilating_polynomial, is_algebraically_independent
from .errors import DomainError
from .groebner import divide, exact_divide, gcd
from .nullstellensatz import NullCertificate, certificate, has_common_zero
from .orders import Monomial, monomial_div
from .polynomial import Polynomial, RationalExpression, VariableContext

# (factor index, exponent) pairs with strictly increasing indices; the empty
# tuple denotes the polynomial part.
DenominatorPart = tuple[tuple[int, int], ...]

CertificateRecord = NullCertificate | Annihilator


@dataclass(frozen=True)
class FactoredDenominator:
    """Pairwise-coprime nonconstant factors with positive exponents."""

    factors: tuple[tuple[Polynomial, int], ...]

    def __post_init__(self):
        ctx = None
        for q, e in self.factors:
            if q.is_zero or q.is_constant:
                raise ValueError("denominator factors must be nonconstant")
            if e < 1:
                raise ValueError("factor exponents must be positive")
            if ctx is None:
                ctx = q.context
            elif q.context != ctx:
                raise ValueError("factors live in different variable contexts")

    @property
    def context(self) -> VariableContext:
        return self.factors[0][0].context

    def product(self) -> Polynomial:
        result = Polynomial.one(self.context)
        for q, e in self.factors:
            result = result * q**e
        return result


@dataclass(frozen=True)
class DecompositionTerm:
    """One summand p_A / prod(q_i^b_i); empty part means a polynomial term."""

    numerator: Polynomial
    denominator_part: DenominatorPart

    def __post_init__(self):
        indices = [i for i, _ in self.denominator_part]
        if indices != sorted(set(indices)):
            raise ValueError("factor indices must be strictly increasing")
        if any(b < 1 for _, b in self.denominator_part):
            raise ValueError("denominator exponents must be positive")

    def denominator(self, factored: FactoredDenominator) -> Polynomial:
        result = Polynomial.one(self.numerator.context)
        for i, b in self.denominator_part:
            result = result * factored.factors[i][0] ** b
        return result


@dataclass(frozen=True)
class Decomposition:
    original: RationalExpression
    denominator: FactoredDenominator
    terms: tuple[DecompositionTerm, ...]
    log: tuple[CertificateRecord, ...] = ()


@dataclass(frozen=True)
class TermVerification:
    common_zero_ok: bool
    independence_ok: bool
    size_ok: bool

    @property
    def ok(self) -> bool:
        return self.common_zero_ok and self.independence_ok and self.size_ok


@dataclass(frozen=True)
class VerificationReport:
    sum_ok: bool
    terms: tuple[TermVerification, ...]
    overall: bool


# -- denominator refinement -------------------------------------------------


def _monomial_content(p: Polynomial) -> Monomial:
    monomials = list(p.coefficient_map)
    return tuple(min(m[i] for m in monomials) for i in range(p.context.d))


def _divide_by_monomial(p: Polynomial, content: Monomial) -> Polynomial:
    return Polynomial._raw(
        p.context, {monomial_div(m, content): c for m, c in p.coefficient_map.items()}
    )


def _squarefree_part(p: Polynomial) -> Polynomial:
    # In characteristic zero, gcd(p, dp/dX_1, ..., dp/dX_d) collects exactly
    # the repeated part, so dividing it out leaves the product of the
    # distinct irreducible factors.
    g = p
    for i in range(p.context.d):
        dp = p.derivative(i)
        if dp.is_zero:
            continue
        g = gcd(g, dp)
        if g.is_constant:
            break
    if g.is_constant:
        return p.monic()
    return exact_divide(p, g).monic()


def _squarefree_components(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Split a monic nonconstant polynomial as prod(s_k^k) with the s_k
    squarefree and pairwise coprime."""
    layers: list[Polynomial] = []
    g = p
    while not g.is_constant:
        s = _squarefree_part(g)
        layers.append(s)
        g = exact_divide(g, s).monic()
    components = []
    for k in range(len(layers)):
        if k + 1 < len(layers):
            t = exact_divide(layers[k], layers[k + 1]).monic()
        else:
            t = layers[k]
        if not t.is_constant:
            components.append((t, k + 1))
    return components


def coprime_refine(candidates) -> tuple[FactoredDenominator, Fraction]:
    """Refine factor candidates into a pairwise-coprime squarefree basis.

    Returns the refined factorization together with the constant scalar that
    was split off; the exponent-weighted product of the factors times the
    scalar equals the product of the candidates exactly.  Pure monomial
    content is split into individual variable powers, and repeated parts are
    separated with gcd chains, but no irreducible factorization is attempted.
    """
    pending: list[tuple[Polynomial, int, bool]] = []
    scalar = Fraction(1)
    for q, e in candidates:
        if q.is_zero:
            raise ValueError("zero candidate factor")
        if e < 1:
            raise ValueError("candidate exponents must be positive")
        pending.append((q, e, False))

    accepted: list[tuple[Polynomial, int]] = []
    while pending:
        q, e, ready = pending.pop()
        if q.is_constant:
            scalar *= q.constant_value() ** e
            continue
        if not ready:
            lc = q.leading_coefficient()
            if lc != 1:
                scalar *= lc**e
                q = q * (1 / lc)
            content = _monomial_content(q)
            if any(content):
                for i, a in enumerate(content):
                    if a:
                        pending.append((Polynomial.variable(q.context, i), a * e, True))
                q = _divide_by_monomial(q, content)
                if q.is_constant:
                    scalar *= q.constant_value() ** e
                    continue
            components = _squarefree_components(q)
            if len(components) != 1 or components[0] != (q, 1):
                for t, k in components:
                    pending.append((t, k * e, True))
                continue
        clash = None
        for idx, (b, eb) in enumerate(accepted):
            g = gcd(q, b)
            if not g.is_constant:
                clash = (idx, g)
                break
        if clash is None:
            accepted.append((q, e))
            continue
        idx, g = clash
        b, eb = accepted.pop(idx)
        pending.append((g, e + eb, True))
        # Splinters of squarefree content-free factors keep both properties.
        pending.append((exact_divide(q, g).monic(), e, True))
        pending.append((exact_divide(b, g).monic(), eb, True))

    accepted.sort(key=lambda fe: fe[0].sort_key(), reverse=True)
    accepted.sort(key=lambda fe: (fe[0].total_degree(), len(fe[0])))
    return FactoredDenominator(tuple(accepted)), scalar


# -- the two passes -----------------------------------------------------------


def _powered(factored: FactoredDenominator, part: DenominatorPart) -> list[Polynomial]:
    return [factored.factors[i][0] ** b for i, b in part]


def null_decompose(
    numerator: Polynomial,
    denominator: FactoredDenominator,
    log: list[CertificateRecord] | None = None,
) -> list[DecompositionTerm]:
    """Split until every summand's denominator factors share a common zero.

    A certificate 1 = sum(h_i * q_i^b_i) for a zero-free factor set turns
    p / prod(q_i^b_i) into sum(p*h_i / prod_{j!=i} q_j^b_j), dropping one
    factor per summand; singleton sets always stop the recursion because a
    nonconstant polynomial has a nonempty variety.
    """
    ctx = numerator.context
    zero = Polynomial.zero(ctx)
    full = tuple((i, e) for i, (_, e) in enumerate(denominator.factors))
    pending: dict[DenominatorPart, Polynomial] = {full: numerator}
    finished: dict[DenominatorPart, Polynomial] = {}
    while pending:
        succ: dict[DenominatorPart, Polynomial] = {}
        for part, num in pending.items():
            if num.is_zero:
                continue
            if not part:
                finished[part] = finished.get(part, zero) + num
                continue
            factors = [denominator.factors[i][0] for i, _ in part]
            # The powered factors vanish exactly where the factors do, so the
            # common-zero test may use the cheaper unpowered set.
            if has_common_zero(factors):
                finished[part] = finished.get(part, zero) + num
                continue
            cert = certificate(_powered(denominator, part))
            if log is not None:
                log.append(cert)
            for pos in range(len(part)):
                h = cert.cofactors[pos]
                if h.is_zero:
                    continue
                child = part[:pos] + part[pos + 1 :]
                succ[child] = succ.get(child, zero) + num * h
        pending = {p: v for p, v in succ.items() if not v.is_zero}
    return [DecompositionTerm(v, p) for p, v in finished.items() if not v.is_zero]


def algdep_decompose(
    term: DecompositionTerm,
    denominator: FactoredDenominator,
    log: list[CertificateRecord] | None = None,
) -> list[DecompositionTerm]:
    """Split one summand until its denominator factor set is independent.

    For a dependent set, an annihilator g of the powered factors Q_i =
    q_i^b_i is pivoted on a support element alpha of smallest norm, giving
    1 = -sum(c_nu * Q^nu) / (c_alpha * Q^alpha); multiplying through turns
    the summand into a sum indexed by the remaining support, and the norm
    choice guarantees at least one factor cancels out of every new
    denominator, so the distinct-factor count strictly decreases.
    """
    ctx = term.numerator.context
    zero = Polynomial.zero(ctx)
    pending: dict[DenominatorPart, Polynomial] = {term.denominator_part: term.numerator}
    finished: dict[DenominatorPart, Polynomial] = {}
    while pending:
        succ: dict[DenominatorPart, Polynomial] = {}
        for part, num in pending.items():
            if num.is_zero:
                continue
            if not part:
                finished[part] = finished.get(part, zero) + num
                continue
            factors = [denominator.factors[i][0] for i, _ in part]
            if is_algebraically_independent(factors):
                finished[part] = finished.get(part, zero) + num
                continue
            try:
                ann = annihilating_polynomial(_powered(denominator, part))
            except DomainError as exc:  # pragma: no cover - defect guard
                raise RuntimeError(
                    "annihilator construction failed on a dependent set"
                ) from exc
            if log is not None:
                log.append(ann)
            support = ann.support
            alpha = min(support, key=lambda v: (sum(v), v))
            c_alpha = ann.coefficient(alpha)
            if any(sum(nu) < sum(alpha) for nu in support):
                raise RuntimeError("chosen pivot is not of smallest norm")
            for nu in support:
                if nu == alpha:
                    continue
                if not any(a + 1 <= v for a, v in zip(alpha, nu)):
                    raise RuntimeError("no factor cancels for a support element")
                new_num = num * (-ann.coefficient(nu) / c_alpha)
                new_part: list[tuple[int, int]] = []
                for (i, b), a, v in zip(part, alpha, nu):
                    if v >= a + 1:
                        spare = b * (v - a - 1)
                        if spare:
                            new_num = new_num * denominator.factors[i][0] ** spare
                    else:
                        new_part.append((i, b * (a + 1 - v)))
                child = tuple(new_part)
                succ[child] = succ.get(child, zero) + new_num
        pending = {p: v for p, v in succ.items() if not v.is_zero}
    return [DecompositionTerm(v, p) for p, v in finished.items() if not v.is_zero]


# -- the full pipeline --------------------------------------------------------


def leinartas_decompose(
    expression: RationalExpression,
    factors=None,
) -> Decomposition:
    """Decompose so every summand's factor set has a common zero and is
    algebraically independent.

    When ``factors`` is given, its exponent-weighted product must equal the
    denominator exactly; otherwise the denominator itself is refined into a
    pairwise-coprime basis.  Every certificate used is logged in order.
    """
    ctx = expression.context
    if factors is not None:
        supplied = [(q, int(e)) for q, e in factors]
        product = Polynomial.one(ctx)
        for q, e in supplied:
            if q.context != ctx:
                raise ValueError("factor lives in a different variable context")
            product = product * q**e
        if product != expression.denominator:
            raise DomainError(
                "supplied factor product does not equal the denominator"
            )
        candidates = supplied
    else:
        candidates = [(expression.denominator, 1)]
    factored, scalar = coprime_refine(candidates)
    numerator = expression.numerator * (1 / scalar)

    log: list[CertificateRecord] = []
    merged: dict[DenominatorPart, Polynomial] = {}
    if not factored.factors:
        if not numerator.is_zero:
            merged[()] = numerator
    else:
        zero = Polynomial.zero(ctx)
        for first in null_decompose(numerator, factored, log):
            for second in algdep_decompose(first, factored, log):
                key = second.denominator_part
                merged[key] = merged.get(key, zero) + second.numerator
    terms = [
        DecompositionTerm(num, part)
        for part, num in merged.items()
        if not num.is_zero
    ]
    terms.sort(key=lambda t: (len(t.denominator_part), t.denominator_part))
    return Decomposition(expression, factored, tuple(terms), tuple(log))


def normalize(decomposition: Decomposition) -> Decomposition:
    """Merge equal denominators and reduce each numerator by division.

    Each numerator is replaced by its remainder modulo the expanded
    denominator product; quotients accumulate into a single polynomial-part
    term, zero numerators are dropped, and recombination is unchanged.
    """
    factored = decomposition.denominator
    ctx = decomposition.original.context
    zero = Polynomial.zero(ctx)
    merged: dict[DenominatorPart, Polynomial] = {}
    for t in decomposition.terms:
        merged[t.denominator_part] = merged.get(t.denominator_part, zero) + t.numerator
    poly_part = merged.pop((), zero)
    out = []
    for part, num in merged.items():
        if num.is_zero:
            continue
        result = divide(num, [DecompositionTerm(num, part).denominator(factored)])
        poly_part = poly_part + result.quotients[0]
        if not result.remainder.is_zero:
            out.append(DecompositionTerm(result.remainder, part))
    if not poly_part.is_zero:
        out.append(DecompositionTerm(poly_part, ()))
    out.sort(key=lambda t: (len(t.denominator_part), t.denominator_part))
    return Decomposition(decomposition.original, factored, tuple(out), decomposition.log)


def verify(decomposition: Decomposition) -> VerificationReport:
    """Exact recombination plus the per-term structural conditions.

    A failing report is data, not an error.  Empty-denominator terms pass
    the per-term checks vacuously.
    """
    factored = decomposition.denominator
    ctx = decomposition.original.context
    m = len(factored.factors)
    high = [0] * m
    for t in decomposition.terms:
        for i, b in t.denominator_part:
            high[i] = max(high[i], b)
    common = Polynomial.one(ctx)
    for (q, _), b in zip(factored.factors, high):
        if b:
            common = common * q**b
    total = Polynomial.zero(ctx)
    for t in decomposition.terms:
        scaled = t.numerator
        used = dict(t.denominator_part)
        for i, (q, _) in enumerate(factored.factors):
            e = high[i] - used.get(i, 0)
            if e:
                scaled = scaled * q**e
        total = total + scaled
    sum_ok = (
        total * decomposition.original.denominator
        == decomposition.original.numerator * common
    )
    checks = []
    for t in decomposition.terms:
        part = t.denominator_part
        if not part:
            checks.append(TermVerification(True, True, True))
            continue
        checks.append(
            TermVerification(
                has_common_zero(_powered(factored, part)),
                is_algebraically_independent(
                    [factored.factors[i][0] for i, _ in part]
                ),
                len(part) <= ctx.d,
            )
        )
    overall = sum_ok and all(c.ok for c in checks)
    return VerificationReport(sum_ok, tuple(checks), overall)
