"""Text grammar for polynomials.

    expr     := ('+'|'-')? term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' nat)?
    atom     := rational | variable | '(' expr ')'
    variable := ('x'|'Y') '[' nat ',' nat ']'
    rational := int ('/' nat)?

Whitespace is insignificant; implicit multiplication is rejected.  The
formatter emits terms in descending graded-lex order with explicit signs,
and parsing its output reproduces the polynomial exactly, so formatted
text is a fixed point of format(parse(.)).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidIndex, ParseError
from .poly import Monomial, Polynomial, Variable, xvar, yvar

_TOKEN_RE = re.compile(r"(?P<num>\d+)|(?P<name>[xY])|(?P<sym>[-+*/^()\[\],])|(?P<bad>\S)")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", one of the symbol characters, or "eof"
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        for match in _TOKEN_RE.finditer(line):
            col = match.start() + 1
            if match.lastgroup == "num":
                tokens.append(Token("num", match.group(), lineno, col))
            elif match.lastgroup == "name":
                tokens.append(Token("name", match.group(), lineno, col))
            elif match.lastgroup == "sym":
                tokens.append(Token(match.group(), match.group(), lineno, col))
            else:
                raise ParseError(f"unexpected character {match.group()!r}", lineno, col)
    lines = text.splitlines()
    last_line = len(lines) if lines else 1
    last_col = len(lines[-1]) + 1 if lines else 1
    tokens.append(Token("eof", "", last_line, last_col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def accept(self, kind: str) -> Token | None:
        if self.peek().kind == kind:
            return self.advance()
        return None

    def expect(self, kind: str, label: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"unexpected {_describe(tok)}", tok.line, tok.column, (label,))
        return self.advance()

    # expr := ('+'|'-')? term (('+'|'-') term)*
    def parse_expr(self) -> Polynomial:
        negate = False
        if self.accept("-"):
            negate = True
        else:
            self.accept("+")
        result = self.parse_term()
        if negate:
            result = -result
        while True:
            if self.accept("+"):
                result = result + self.parse_term()
            elif self.accept("-"):
                result = result - self.parse_term()
            else:
                return result

    # term := factor ('*' factor)*
    def parse_term(self) -> Polynomial:
        result = self.parse_factor()
        while self.accept("*"):
            result = result * self.parse_factor()
        return result

    # factor := atom ('^' nat)?
    def parse_factor(self) -> Polynomial:
        base = self.parse_atom()
        if self.accept("^"):
            tok = self.expect("num", "exponent")
            return base ** int(tok.text)
        return base

    # atom := rational | variable | '(' expr ')'
    def parse_atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "num":
            return Polynomial.constant(self.parse_rational(1))
        if tok.kind in ("-", "+") and self.tokens[self.pos + 1].kind == "num":
            self.advance()
            return Polynomial.constant(self.parse_rational(-1 if tok.kind == "-" else 1))
        if tok.kind == "name":
            return Polynomial.variable(self.parse_variable())
        if tok.kind == "(":
            self.advance()
            inner = self.parse_expr()
            self.expect(")", "')'")
            return inner
        raise ParseError(
            f"unexpected {_describe(tok)}",
            tok.line,
            tok.column,
            ("number", "'x'", "'Y'", "'('"),
        )

    # rational := int ('/' nat)?
    def parse_rational(self, sign: int) -> Fraction:
        num = int(self.expect("num", "number").text)
        if self.accept("/"):
            tok = self.expect("num", "denominator")
            den = int(tok.text)
            if den == 0:
                raise ParseError("denominator must be positive", tok.line, tok.column)
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    # variable := ('x'|'Y') '[' nat ',' nat ']'
    def parse_variable(self) -> Variable:
        name = self.expect("name", "variable name")
        self.expect("[", "'['")
        first = self._index()
        self.expect(",", "','")
        second = self._index()
        self.expect("]", "']'")
        return xvar(first, second) if name.text == "x" else yvar(first, second)

    def _index(self) -> int:
        tok = self.expect("num", "index")
        value = int(tok.text)
        if value < 1:
            raise InvalidIndex("variable indices are 1-based", tok.line, tok.column)
        return value


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "eof" else f"{tok.text!r}"


def parse_polynomial(text: str) -> Polynomial:
    """Parse polynomial text into canonical form.

    Raises ParseError (with 1-based line and column) on malformed input
    and InvalidIndex on out-of-domain variable indices.
    """
    parser = _Parser(_tokenize(text))
    result = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"unexpected {_describe(tok)}", tok.line, tok.column,
                         ("'+'", "'-'", "'*'", "end of input"))
    return result


def format_polynomial(p: Polynomial) -> str:
    """Deterministic canonical text: descending graded-lex terms, explicit
    signs, rationals as ``a`` or ``a/b``, exponents with ``^``."""
    return str(p)


def parse_rational_token(text: str) -> Fraction:
    """Parse a standalone rational like ``-3`` or ``5/7`` (used for matrix
    and point files)."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}", 1, 1) from None
