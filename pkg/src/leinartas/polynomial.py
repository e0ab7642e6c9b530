"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a mapping from exponent tuples to nonzero ``Fraction``
coefficients, attached to a fixed ``VariableContext``.  The representation is
canonical: no zero coefficients, no duplicate monomials, and the ``terms``
view is sorted strictly descending under degree-reverse-lexicographic order
with the context's declared variable order.  Values are immutable after
construction and all operations are pure, so polynomials may be shared
freely across threads.

Coefficients are always ``fractions.Fraction``: reduced, positive
denominator, zero as 0/1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .orders import Monomial, degrevlex_key, monomial_mul

Rational = Fraction

_ZERO = Fraction(0)


@dataclass(frozen=True)
class VariableContext:
    """Ordered, distinct variable names fixing the ambient polynomial ring."""

    names: tuple[str, ...]

    def __init__(self, names: Iterable[str]):
        object.__setattr__(self, "names", tuple(names))
        if not self.names:
            raise ValueError("a variable context needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        if any(not n for n in self.names):
            raise ValueError("variable names must be nonempty")

    @property
    def d(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def __str__(self) -> str:
        return ", ".join(self.names)


class Polynomial:
    """Canonical sparse polynomial over Q in a fixed variable context."""

    __slots__ = ("context", "_coeffs", "_terms", "_hash")

    def __init__(
        self,
        context: VariableContext,
        terms: Iterable[tuple[Sequence[int], Rational | int]] = (),
    ):
        coeffs: dict[Monomial, Fraction] = {}
        d = context.d
        for exponents, coefficient in terms:
            exps = tuple(exponents)
            if len(exps) != d:
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, expected {d}"
                )
            if any(e < 0 or not isinstance(e, int) for e in exps):
                raise ValueError(f"exponents must be non-negative integers: {exps}")
            c = coeffs.get(exps, _ZERO) + Fraction(coefficient)
            if c:
                coeffs[exps] = c
            else:
                coeffs.pop(exps, None)
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "_coeffs", coeffs)
        object.__setattr__(self, "_terms", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _raw(cls, context: VariableContext, coeffs: dict[Monomial, Fraction]) -> "Polynomial":
        # Internal fast path: trusts that coeffs is already canonical.
        self = object.__new__(cls)
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "_coeffs", coeffs)
        object.__setattr__(self, "_terms", None)
        object.__setattr__(self, "_hash", None)
        return self

    @classmethod
    def zero(cls, context: VariableContext) -> "Polynomial":
        return cls._raw(context, {})

    @classmethod
    def one(cls, context: VariableContext) -> "Polynomial":
        return cls.constant(context, 1)

    @classmethod
    def constant(cls, context: VariableContext, value: Rational | int) -> "Polynomial":
        c = Fraction(value)
        if not c:
            return cls.zero(context)
        return cls._raw(context, {(0,) * context.d: c})

    @classmethod
    def variable(cls, context: VariableContext, which: int | str) -> "Polynomial":
        i = context.index(which) if isinstance(which, str) else which
        if not 0 <= i < context.d:
            raise ValueError(f"variable index {i} out of range")
        exps = [0] * context.d
        exps[i] = 1
        return cls._raw(context, {tuple(exps): Fraction(1)})

    # -- views ---------------------------------------------------------

    @property
    def coefficient_map(self) -> dict[Monomial, Fraction]:
        """The underlying monomial -> coefficient mapping.  Do not mutate."""
        return self._coeffs

    @property
    def terms(self) -> tuple[tuple[Monomial, Fraction], ...]:
        """Terms sorted strictly descending under the canonical order."""
        if self._terms is None:
            ordered = tuple(
                sorted(self._coeffs.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)
            )
            object.__setattr__(self, "_terms", ordered)
        return self._terms

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self._coeffs.get(tuple(exponents), _ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self._coeffs)

    @property
    def is_one(self) -> bool:
        return self.is_constant and self.constant_value() == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("polynomial is not constant")
        return self._coeffs.get((0,) * self.context.d, _ZERO)

    def total_degree(self) -> int:
        """Maximum term degree; -1 for the zero polynomial."""
        if not self._coeffs:
            return -1
        return max(sum(m) for m in self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # -- ring operations -----------------------------------------------

    def _check_context(self, other: "Polynomial") -> None:
        if self.context != other.context:
            raise ValueError("polynomials live in different variable contexts")

    @staticmethod
    def _coerce(value, context: VariableContext) -> "Polynomial | None":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return Polynomial.constant(context, value)
        return None

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other, self.context)
        if other is None:
            return NotImplemented
        self._check_context(other)
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            v = out.get(m, _ZERO) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.context, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.context, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other, self.context)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other, self.context)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.context)
            return Polynomial._raw(
                self.context, {m: v * c for m, v in self._coeffs.items()}
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_context(other)
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self._coeffs.items():
            for mb, cb in other._coeffs.items():
                m = monomial_mul(ma, mb)
                v = out.get(m, _ZERO) + ca * cb
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._raw(self.context, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = Polynomial.one(self.context)
        for _ in range(exponent):
            result = result * self
        return result

    # -- calculus and evaluation ----------------------------------------

    def evaluate(self, point: Sequence[Rational | int]) -> Fraction:
        """Exact value at a rational point (one value per variable)."""
        values = [Fraction(v) for v in point]
        if len(values) != self.context.d:
            raise ValueError(
                f"point has {len(values)} coordinates, expected {self.context.d}"
            )
        total = _ZERO
        for m, c in self._coeffs.items():
            term = c
            for e, v in zip(m, values):
                if e:
                    term *= v**e
            total += term
        return total

    def derivative(self, variable: int | str) -> "Polynomial":
        """Formal partial derivative with respect to one variable."""
        i = self.context.index(variable) if isinstance(variable, str) else variable
        if not 0 <= i < self.context.d:
            raise ValueError(f"variable index {i} out of range")
        out: dict[Monomial, Fraction] = {}
        for m, c in self._coeffs.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1 :]] = c * e
        return Polynomial._raw(self.context, out)

    def compose(self, values: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute a polynomial for each variable.

        All substituted values must share one context; the result lives there.
        """
        if len(values) != self.context.d:
            raise ValueError("one substitution value per variable is required")
        target = values[0].context
        for v in values:
            if v.context != target:
                raise ValueError("substitution values live in different contexts")
        result = Polynomial.zero(target)
        for m, c in self._coeffs.items():
            term = Polynomial.constant(target, c)
            for e, v in zip(m, values):
                if e:
                    term = term * v**e
            result = result + term
        return result

    # -- leading data -----------------------------------------------------

    def leading_monomial(self, order=None) -> Monomial:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading monomial")
        key = degrevlex_key if order is None else order.key
        return max(self._coeffs, key=key)

    def leading_coefficient(self, order=None) -> Fraction:
        return self._coeffs[self.leading_monomial(order)]

    def monic(self, order=None) -> "Polynomial":
        """Scale so the leading coefficient under the order is 1."""
        if not self._coeffs:
            raise ValueError("cannot normalize the zero polynomial")
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return self * (1 / lc)

    # -- context embedding ------------------------------------------------

    def embed(self, context: VariableContext, positions: Sequence[int]) -> "Polynomial":
        """Recast into a larger context; positions[i] is the new slot of
        variable i."""
        if len(positions) != self.context.d:
            raise ValueError("one target position per variable is required")
        out: dict[Monomial, Fraction] = {}
        for m, c in self._coeffs.items():
            exps = [0] * context.d
            for e, p in zip(m, positions):
                exps[p] = e
            out[tuple(exps)] = c
        return Polynomial._raw(context, out)

    def restrict(self, context: VariableContext, positions: Sequence[int]) -> "Polynomial":
        """Project onto a smaller context; positions[i] is the old slot of the
        new variable i.  Every dropped variable must have exponent zero."""
        keep = set(positions)
        out: dict[Monomial, Fraction] = {}
        for m, c in self._coeffs.items():
            if any(e and i not in keep for i, e in enumerate(m)):
                raise ValueError("polynomial involves a variable outside the restriction")
            out[tuple(m[p] for p in positions)] = c
        return Polynomial._raw(context, out)

    # -- comparison and display -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.context, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.context == other.context and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.context, frozenset(self._coeffs.items())))
            )
        return self._hash

    def sort_key(self):
        """A deterministic total-order key on polynomials of one context."""
        return tuple((m, (c.numerator, c.denominator)) for m, c in self.terms)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        chunks: list[str] = []
        for m, c in self.terms:
            factors = []
            for name, e in zip(self.context.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = str(magnitude) + "*" + "*".join(factors)
            if not chunks:
                chunks.append(f"-{body}" if c < 0 else body)
            else:
                chunks.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial([{self.context}], {self})"


def canonicalize(
    terms: Iterable[tuple[Sequence[int], Rational | int]], context: VariableContext
) -> Polynomial:
    """Merge duplicate monomials, drop zeros, sort under the canonical order."""
    return Polynomial(context, terms)


@dataclass(frozen=True)
class RationalExpression:
    """A numerator/denominator pair; never reduced to lowest terms."""

    numerator: Polynomial
    denominator: Polynomial

    def __post_init__(self):
        if self.numerator.context != self.denominator.context:
            raise ValueError("numerator and denominator contexts differ")
        if self.denominator.is_zero:
            raise ValueError("denominator must be nonzero")

    @property
    def context(self) -> VariableContext:
        return self.numerator.context

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"
