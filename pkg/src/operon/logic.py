"""Boolean expression trees shared by the GF(2) translator and network models.

Operator precedence is NOT > AND > XOR > OR; the binary operators associate
to the left.  The concrete syntax uses ``!``, ``&``, ``^``, ``|``, parentheses
and the constants ``0`` and ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .errors import ParseError


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Not:
    arg: "Expr"


@dataclass(frozen=True)
class And:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Or:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Xor:
    left: "Expr"
    right: "Expr"


Expr = Union[Var, Const, Not, And, Or, Xor]

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|([01])|([!&|^()]))")


def tokenize(text: str, line: int | None = None) -> list[tuple[str, str, int]]:
    """Split into (kind, value, column) triples; kind is ident/const/op."""
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} in expression", line)
        ident, const, op = m.groups()
        col = m.start(1) if ident else m.start(2) if const else m.start(3)
        if ident is not None:
            out.append(("ident", ident, col))
        elif const is not None:
            out.append(("const", const, col))
        else:
            out.append(("op", op, col))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, line=None):
        self.tokens = tokens
        self.pos = 0
        self.line = line

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.line)
        self.pos += 1
        return tok

    def expect_op(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r} at column {tok[2] + 1}", self.line)

    def parse(self) -> Expr:
        expr = self.or_expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r} at column {tok[2] + 1}", self.line)
        return expr

    def or_expr(self) -> Expr:
        expr = self.xor_expr()
        while self._at_op("|"):
            self.take()
            expr = Or(expr, self.xor_expr())
        return expr

    def xor_expr(self) -> Expr:
        expr = self.and_expr()
        while self._at_op("^"):
            self.take()
            expr = Xor(expr, self.and_expr())
        return expr

    def and_expr(self) -> Expr:
        expr = self.unary()
        while self._at_op("&"):
            self.take()
            expr = And(expr, self.unary())
        return expr

    def unary(self) -> Expr:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "!":
            self.take()
            return Not(self.unary())
        return self.atom()

    def atom(self) -> Expr:
        kind, value, col = self.take()
        if kind == "ident":
            return Var(value)
        if kind == "const":
            return Const(int(value))
        if value == "(":
            inner = self.or_expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected {value!r} at column {col + 1}", self.line)

    def _at_op(self, op):
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] == op


def parse_expr(text: str, line: int | None = None) -> Expr:
    """Parse a Boolean expression; raises ParseError on malformed input."""
    tokens = tokenize(text, line)
    if not tokens:
        raise ParseError("empty expression", line)
    return _Parser(tokens, line).parse()


def evaluate(expr: Expr, env: Mapping[str, int]) -> int:
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Var):
        if expr.name not in env:
            raise ValueError(f"no value for identifier '{expr.name}'")
        return env[expr.name] & 1
    if isinstance(expr, Not):
        return 1 - evaluate(expr.arg, env)
    a = evaluate(expr.left, env)
    b = evaluate(expr.right, env)
    if isinstance(expr, And):
        return a & b
    if isinstance(expr, Or):
        return a | b
    return a ^ b


def variables(expr: Expr) -> set[str]:
    if isinstance(expr, Var):
        return {expr.name}
    if isinstance(expr, Const):
        return set()
    if isinstance(expr, Not):
        return variables(expr.arg)
    return variables(expr.left) | variables(expr.right)


def substitute(expr: Expr, bindings: Mapping[str, int]) -> Expr:
    """Replace named variables with 0/1 constants; other nodes are rebuilt."""
    if isinstance(expr, Var):
        if expr.name in bindings:
            return Const(bindings[expr.name] & 1)
        return expr
    if isinstance(expr, Const):
        return expr
    if isinstance(expr, Not):
        return Not(substitute(expr.arg, bindings))
    cls = type(expr)
    return cls(substitute(expr.left, bindings), substitute(expr.right, bindings))
