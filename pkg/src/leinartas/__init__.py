"""Exact multivariate partial fraction decomposition over the rationals.

The engine rewrites a rational expression p/q as a sum of fractions whose
denominator factor sets simultaneously have a common zero over the algebraic
closure and are algebraically independent, produces machine-checkable
certificates for every rewriting step, and verifies results by exact
recombination.
"""

from .algdep import (
    Annihilator,
    annihilating_polynomial,
    is_algebraically_independent,
    jacobian,
)
from .decompose import (
    Decomposition,
    DecompositionTerm,
    FactoredDenominator,
    TermVerification,
    VerificationReport,
    algdep_decompose,
    coprime_refine,
    leinartas_decompose,
    normalize,
    null_decompose,
    verify,
)
from .errors import DomainError, ParseError
from .groebner import (
    DivisionResult,
    TrackedBasis,
    buchberger,
    divide,
    eliminate,
    exact_divide,
    gcd,
    ideal_contains_one,
)
from .nullstellensatz import NullCertificate, certificate, has_common_zero
from .orders import (
    DEGREVLEX,
    LEX,
    Block,
    DegRevLex,
    Lex,
    Monomial,
    MonomialOrder,
    compare,
    elimination_order,
)
from .parser import ParsedInput, parse_expression, parse_polynomial
from .polynomial import (
    Polynomial,
    Rational,
    RationalExpression,
    VariableContext,
    canonicalize,
)
from .render import OutputDocument, polynomial_latex, render

__version__ = "0.1.0"

__all__ = [
    "Annihilator",
    "Block",
    "DEGREVLEX",
    "Decomposition",
    "DecompositionTerm",
    "DegRevLex",
    "DivisionResult",
    "DomainError",
    "FactoredDenominator",
    "LEX",
    "Lex",
    "Monomial",
    "MonomialOrder",
    "NullCertificate",
    "OutputDocument",
    "ParseError",
    "ParsedInput",
    "Polynomial",
    "Rational",
    "RationalExpression",
    "TermVerification",
    "TrackedBasis",
    "VariableContext",
    "VerificationReport",
    "algdep_decompose",
    "annihilating_polynomial",
    "buchberger",
    "canonicalize",
    "certificate",
    "compare",
    "coprime_refine",
    "divide",
    "eliminate",
    "elimination_order",
    "exact_divide",
    "gcd",
    "has_common_zero",
    "ideal_contains_one",
    "is_algebraically_independent",
    "jacobian",
    "leinartas_decompose",
    "normalize",
    "null_decompose",
    "parse_expression",
    "parse_polynomial",
    "polynomial_latex",
    "render",
    "verify",
]
