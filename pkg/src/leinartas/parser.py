"""Recursive-descent parser for rational expressions.

Grammar (no implicit multiplication):

    expression := term (('+' | '-') term)*
    term       := unary (('*' | '/') unary)*
    unary      := '-' unary | factor
    factor     := atom ('^' INTEGER)?
    atom       := INTEGER | IDENTIFIER | '(' expression ')'

'/' builds field-of-fractions values, so the parse evaluates to one exact
numerator/denominator pair; '^' takes integer exponents >= 0 on atomic or
parenthesized factors.  Every diagnostic carries the source position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError, ParseError
from .polynomial import Polynomial, RationalExpression, VariableContext

MAX_EXPONENT = 10_000

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()])"
)


@dataclass(frozen=True)
class ParsedInput:
    variables: VariableContext
    expression: RationalExpression
    supplied_factors: tuple[tuple[Polynomial, int], ...] | None = None


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "name" | "op" | "end"
    text: str
    position: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("end", "", len(source)))
    return tokens


class _Parser:
    """Evaluates the parse tree by exact field arithmetic on
    (numerator, denominator) pairs; no reduction to lowest terms."""

    def __init__(self, source: str, context: VariableContext):
        self.tokens = _tokenize(source)
        self.context = context
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> tuple[Polynomial, Polynomial]:
        value = self.expression()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(
                f"unexpected {tok.text!r}; operators must be explicit", tok.position
            )
        return value

    def expression(self):
        value = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            num, den = value
            rnum, rden = self.term()
            if op == "+":
                value = (num * rden + rnum * den, den * rden)
            else:
                value = (num * rden - rnum * den, den * rden)
        return value

    def term(self):
        value = self.unary()
        while self.peek().kind == "op" and self.peek().text in "*/":
            tok = self.advance()
            num, den = value
            rnum, rden = self.unary()
            if tok.text == "*":
                value = (num * rnum, den * rden)
            else:
                if rnum.is_zero:
                    raise DomainError(
                        f"division by zero at position {tok.position}"
                    )
                value = (num * rden, den * rnum)
        return value

    def unary(self):
        if self.peek().kind == "op" and self.peek().text == "-":
            self.advance()
            num, den = self.unary()
            return (-num, den)
        return self.factor()

    def factor(self):
        value = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.advance()
            tok = self.peek()
            if tok.kind == "op" and tok.text == "-":
                raise ParseError("exponents must be non-negative integers", tok.position)
            if tok.kind != "int":
                raise ParseError("expected an integer exponent after '^'", tok.position)
            self.advance()
            exponent = int(tok.text)
            if exponent > MAX_EXPONENT:
                raise ParseError(
                    f"exponent {exponent} exceeds the limit {MAX_EXPONENT}", tok.position
                )
            num, den = value
            value = (num**exponent, den**exponent)
        return value

    def atom(self):
        tok = self.advance()
        one = Polynomial.one(self.context)
        if tok.kind == "int":
            return (Polynomial.constant(self.context, int(tok.text)), one)
        if tok.kind == "name":
            if tok.text not in self.context.names:
                raise ParseError(f"unknown identifier {tok.text!r}", tok.position)
            return (Polynomial.variable(self.context, tok.text), one)
        if tok.kind == "op" and tok.text == "(":
            value = self.expression()
            closing = self.advance()
            if not (closing.kind == "op" and closing.text == ")"):
                raise ParseError("expected ')'", closing.position)
            return value
        raise ParseError(
            f"expected a number, variable or '(', found {tok.text or 'end of input'!r}",
            tok.position,
        )


def parse_expression(source: str, variables) -> ParsedInput:
    """Parse a rational expression over declared variables.

    The declared order fixes the variable context and hence the canonical
    term order of every polynomial produced.
    """
    context = VariableContext(variables)
    numerator, denominator = _Parser(source, context).parse()
    return ParsedInput(context, RationalExpression(numerator, denominator))


def parse_polynomial(source: str, context: VariableContext) -> Polynomial:
    """Parse text that must denote a polynomial (constant denominator)."""
    numerator, denominator = _Parser(source, context).parse()
    if not denominator.is_constant:
        raise ParseError("expected a polynomial, not a proper fraction", 0)
    return numerator * (1 / denominator.constant_value())
