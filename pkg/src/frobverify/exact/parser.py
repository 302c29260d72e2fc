"""Recursive-descent parser for polynomial expressions.

Grammar (lowest to highest precedence)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' exponent)?
    exponent:= INT ('^' exponent)?          # right-associative, literals only
    atom    := INT | NAME | '(' expr ')'

Division is only allowed by a nonzero constant, which covers rational
literals such as ``3/4``. Juxtaposition (``2z1``) is a syntax error.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .poly import MultiPoly, UnknownVariableError, VarTable


class ParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class Token(NamedTuple):
    kind: str  # INT, NAME, OP, EOF
    text: str
    pos: int


_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


def tokenize(text: str) -> list[Token]:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        start = m.start()
        if m.group(1):
            tokens.append(Token("INT", m.group(1), start))
        elif m.group(2):
            tokens.append(Token("NAME", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(Token("OP", ch, start))
    tokens.append(Token("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, table: VarTable):
        self.tokens = tokenize(text)
        self.i = 0
        self.table = table

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind != "OP":
            raise ParseError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        return self.advance()

    def parse(self) -> MultiPoly:
        if self.tok.kind == "EOF":
            raise ParseError("empty expression", 0)
        p = self.expr()
        if self.tok.kind != "EOF":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return p

    def expr(self) -> MultiPoly:
        p = self.term()
        while self.tok.kind == "OP" and self.tok.text in "+-":
            op = self.advance().text
            rhs = self.term()
            p = p + rhs if op == "+" else p - rhs
        return p

    def term(self) -> MultiPoly:
        p = self.unary()
        while self.tok.kind == "OP" and self.tok.text in "*/":
            op = self.advance()
            rhs = self.unary()
            if op.text == "*":
                p = p * rhs
            else:
                if rhs.degree() > 0:
                    raise ParseError("division by a non-constant expression", op.pos)
                if rhs.is_zero():
                    raise ParseError("division by zero", op.pos)
                p = p / rhs.constant_term()
        return p

    def unary(self) -> MultiPoly:
        if self.tok.kind == "OP" and self.tok.text in "+-":
            op = self.advance().text
            p = self.unary()
            return -p if op == "-" else p
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        if self.tok.kind == "OP" and self.tok.text == "^":
            self.advance()
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        tok = self.tok
        if tok.kind == "OP" and tok.text == "-":
            raise ParseError("negative exponent", tok.pos)
        if tok.kind != "INT":
            raise ParseError("exponent must be a non-negative integer literal", tok.pos)
        self.advance()
        e = int(tok.text)
        if self.tok.kind == "OP" and self.tok.text == "^":
            self.advance()
            e = e ** self.exponent()
        return e

    def atom(self) -> MultiPoly:
        tok = self.tok
        if tok.kind == "INT":
            self.advance()
            p = MultiPoly.constant(self.table, int(tok.text))
        elif tok.kind == "NAME":
            self.advance()
            if tok.text not in self.table:
                raise UnknownVariableError(tok.text)
            p = MultiPoly.var(self.table, tok.text)
        elif tok.kind == "OP" and tok.text == "(":
            self.advance()
            p = self.expr()
            self.expect(")")
        else:
            raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)
        nxt = self.tok
        if nxt.kind in ("INT", "NAME") or (nxt.kind == "OP" and nxt.text == "("):
            raise ParseError("implicit multiplication is not allowed", nxt.pos)
        return p


def parse_poly(text: str, table) -> MultiPoly:
    """Parse ``text`` into a :class:`MultiPoly` over ``table``."""
    table = table if isinstance(table, VarTable) else VarTable(table)
    return _Parser(text, table).parse()
