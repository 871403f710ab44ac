"""Recursive-descent parser for polynomial input.

Grammar (whitespace insignificant, implicit multiplication not allowed):

    expr     := ('+'|'-')? term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | variable | '(' expr ')'
    rational := '-'? nat ('/' nat)?

Errors carry the 0-based character position of the offending token.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polyring import Polynomial


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text; ``position`` indexes into the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(PolynomialSyntaxError):
    pass


_SYMBOLS = "+-*/^()"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(("sym", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise PolynomialSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.names = list(names)
        self.nvars = len(self.names)

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_sym(self, sym: str):
        kind, value, at = self.peek()
        if kind != "sym" or value != sym:
            raise PolynomialSyntaxError(f"expected {sym!r}", at)
        return self.advance()

    def parse(self) -> Polynomial:
        result = self.parse_expr()
        kind, value, at = self.peek()
        if kind != "end":
            raise PolynomialSyntaxError(f"unexpected trailing input {value!r}", at)
        return result

    def parse_expr(self) -> Polynomial:
        kind, value, _ = self.peek()
        negate = False
        if kind == "sym" and value in "+-":
            self.advance()
            negate = value == "-"
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value in "+-":
                self.advance()
                term = self.parse_term()
                result = result + (-term if value == "-" else term)
            else:
                return result

    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value == "*":
                self.advance()
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self) -> Polynomial:
        base = self.parse_base()
        kind, value, _ = self.peek()
        if kind == "sym" and value == "^":
            self.advance()
            kind, value, at = self.advance()
            if kind != "int":
                raise PolynomialSyntaxError("expected a natural number exponent", at)
            return base ** int(value)
        return base

    def parse_base(self) -> Polynomial:
        kind, value, at = self.peek()
        if kind == "sym" and value == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect_sym(")")
            return inner
        if kind == "sym" and value == "-":
            self.advance()
            return -self._parse_rational()
        if kind == "int":
            return self._parse_rational()
        if kind == "name":
            self.advance()
            try:
                index = self.names.index(value)
            except ValueError:
                raise UnknownVariableError(f"unknown variable {value!r}", at) from None
            return Polynomial.variable(self.nvars, index)
        raise PolynomialSyntaxError(
            "expected a number, variable, or parenthesized expression", at)

    def _parse_rational(self) -> Polynomial:
        kind, value, at = self.advance()
        if kind != "int":
            raise PolynomialSyntaxError("expected a number", at)
        numerator = int(value)
        kind, value, _ = self.peek()
        if kind == "sym" and value == "/":
            self.advance()
            kind, value, at = self.advance()
            if kind != "int":
                raise PolynomialSyntaxError("expected a denominator", at)
            if int(value) == 0:
                raise PolynomialSyntaxError("zero denominator", at)
            return Polynomial.constant(self.nvars, Fraction(numerator, int(value)))
        return Polynomial.constant(self.nvars, numerator)


def parse_polynomial(text: str, ring_or_names) -> Polynomial:
    """Parse ``text`` against the declared variables.

    ``ring_or_names`` is a WeightedRing or a plain sequence of names.
    """
    names = getattr(ring_or_names, "variable_names", ring_or_names)
    return _Parser(text, names).parse()
