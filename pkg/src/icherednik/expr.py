"""Recursive-descent parser for element expressions.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | base ('^' uint)?
    base   := literal | ident | '(' expr ')'

Literals are integers or ``p/q`` fractions written without spaces.
Identifiers are the generators ``tau h e f x y x1 y1`` and ``Delta``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import embed_central
from .central import CentralPoly
from .fields import Field
from .pbw import GENERATORS, RelationTable

IDENTIFIERS = frozenset(GENERATORS) | {"Delta"}
CENTRAL_IDENTIFIERS = frozenset(("Delta", "tau"))


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, col))
        pos = m.end()
    col = pos - line_start + 1
    tokens.append(Token("eof", "", line, col))
    return tokens


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.peek()
        raise ExprSyntaxError(message, tok.line, tok.column)

    def parse(self):
        if self.peek().kind == "eof":
            self.error("empty expression")
        node = self.expr()
        tok = self.peek()
        if tok.kind != "eof":
            if tok.text == ")":
                self.error("unbalanced ')'")
            self.error(f"unexpected {tok.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek().text == "*":
            self.take()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        if self.peek().text == "-":
            self.take()
            return Neg(self.factor())
        node = self.base()
        if self.peek().text == "^":
            self.take()
            tok = self.take()
            if tok.kind != "num" or "/" in tok.text:
                self.error("exponent must be a non-negative integer", tok)
            node = Pow(node, int(tok.text))
        return node

    def base(self):
        tok = self.peek()
        if tok.kind == "num":
            self.take()
            return Num(Fraction(tok.text))
        if tok.kind == "ident":
            self.take()
            if tok.text not in IDENTIFIERS:
                self.error(f"unknown identifier {tok.text!r}", tok)
            return Var(tok.text)
        if tok.text == "(":
            self.take()
            node = self.expr()
            if self.peek().text != ")":
                self.error("unbalanced '(': expected ')'")
            self.take()
            return node
        if tok.kind == "eof":
            self.error("unexpected end of input")
        self.error(f"unexpected {tok.text!r}")


def parse(text: str):
    return Parser(text).parse()


_PREC = {"+": 1, "-": 1, "*": 2}


def to_text(node) -> str:
    """Print a tree so that :func:`parse` gives the same tree back."""
    if isinstance(node, Num):
        v = node.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        inner = node.operand
        text = to_text(inner)
        if isinstance(inner, BinOp):
            text = f"({text})"
        return f"-{text}"
    if isinstance(node, Pow):
        base = node.base
        text = to_text(base)
        if not isinstance(base, (Num, Var)) or (isinstance(base, Num) and base.value.denominator != 1):
            text = f"({text})"
        return f"{text}^{node.exponent}"
    if isinstance(node, BinOp):
        prec = _PREC[node.op]
        left = to_text(node.left)
        if isinstance(node.left, BinOp) and _PREC[node.left.op] < prec:
            left = f"({left})"
        right = to_text(node.right)
        if isinstance(node.right, BinOp) and _PREC[node.right.op] <= prec:
            right = f"({right})"
        if isinstance(node.right, Neg):
            right = f"({right})"
        return f"{left} {node.op} {right}" if prec == 1 else f"{left}*{right}"
    raise TypeError(f"not an expression node: {node!r}")


def _evaluate(node, leaf):
    if isinstance(node, Num) or isinstance(node, Var):
        return leaf(node)
    if isinstance(node, Neg):
        return -_evaluate(node.operand, leaf)
    if isinstance(node, Pow):
        return _evaluate(node.base, leaf) ** node.exponent
    a = _evaluate(node.left, leaf)
    b = _evaluate(node.right, leaf)
    if node.op == "+":
        return a + b
    if node.op == "-":
        return a - b
    return a * b


class EvaluationError(ValueError):
    pass


def to_central(node, field: Field) -> CentralPoly:
    """Evaluate a tree in k[Delta, tau]."""
    if isinstance(node, str):
        node = parse(node)

    def leaf(n):
        if isinstance(n, Num):
            return CentralPoly.const(field(n.value), field)
        if n.name == "Delta":
            return CentralPoly.delta(field)
        if n.name == "tau":
            return CentralPoly.tau(field)
        raise EvaluationError(f"{n.name} is not central; only Delta and tau may appear here")

    return _evaluate(node, leaf)


def to_element(node, table: RelationTable):
    """Evaluate a tree in the algebra of ``table``; Delta expands to the Casimir."""
    if isinstance(node, str):
        node = parse(node)
    field = table.field

    def leaf(n):
        if isinstance(n, Num):
            return table.scalar(field(n.value))
        if n.name == "Delta":
            return embed_central(CentralPoly.delta(field), table)
        return table.gen(n.name)

    return _evaluate(node, leaf)
