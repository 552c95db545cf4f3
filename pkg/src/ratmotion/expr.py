"""Text syntax for dual quaternion polynomials.

Grammar (precedence from loosest to tightest)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INTEGER)*
    atom   := NUMBER | "t" | "i" | "j" | "k" | "eps" | "(" expr ")"

``NUMBER`` is an integer or a rational literal ``p/q`` written without
spaces; there is no division operator.  Multiplication is non-commutative
and left-associative; ``t`` and ``eps`` are central and ``eps*eps = 0``.
Text after ``#`` up to the end of the line is ignored.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ._backend import exact
from .quat_poly import DualQuatPoly, QuatPoly
from .quat_algebra import QI, QJ, QK

__all__ = [
    "ParseError",
    "Num",
    "Sym",
    "Neg",
    "BinOp",
    "Pow",
    "parse_expr",
    "evaluate",
    "parse_motion",
    "format_qpoly",
    "format_motion",
    "to_source",
]


class ParseError(ValueError):
    def __init__(self, message, line, col):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


# -- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str  # one of t, i, j, k, eps


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*"
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


SYMBOLS = ("t", "i", "j", "k", "eps")

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(src):
    pos, line, line_start = 0, 1, 0
    tokens = []
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        text = m.group()
        if kind != "ws":
            tokens.append(_Token(kind, text, line, pos - line_start + 1))
        for k, ch in enumerate(text):
            if ch == "\n":
                line += 1
                line_start = pos + k + 1
        pos = m.end()
    tokens.append(_Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, src):
        self.tokens = _tokenize(src)
        self.pos = 0

    @property
    def tok(self):
        return self.tokens[self.pos]

    def _advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col)

    def _accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            return self._advance()
        return None

    def parse(self):
        if self.tok.kind == "end":
            raise self._error("empty expression")
        node = self.expr()
        if self.tok.kind != "end":
            raise self._error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self._advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self._accept("*"):
            node = BinOp("*", node, self.unary())
        return node

    def unary(self):
        if self._accept("-"):
            return Neg(self.unary())
        if self._accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        while self._accept("^"):
            tok = self.tok
            if tok.kind != "num" or "/" in tok.text:
                raise self._error("exponent must be a nonnegative integer")
            self._advance()
            node = Pow(node, int(tok.text))
        return node

    def atom(self):
        tok = self.tok
        if tok.kind == "num":
            self._advance()
            return Num(Fraction(tok.text))
        if tok.kind == "name":
            if tok.text not in SYMBOLS:
                raise self._error(f"unknown symbol {tok.text!r}")
            self._advance()
            return Sym(tok.text)
        if self._accept("("):
            node = self.expr()
            if not self._accept(")"):
                raise self._error("expected ')'")
            return node
        if tok.kind == "end":
            raise self._error("unexpected end of input")
        raise self._error(f"unexpected {tok.text!r}")


def parse_expr(src):
    """Parse text into an expression tree."""
    return _Parser(src).parse()


_T = QuatPoly((0, 1))
_LEAVES = {
    "t": DualQuatPoly(_T),
    "i": DualQuatPoly(QuatPoly(QI)),
    "j": DualQuatPoly(QuatPoly(QJ)),
    "k": DualQuatPoly(QuatPoly(QK)),
    "eps": DualQuatPoly(QuatPoly(), QuatPoly(1)),
}


def _power(base, n):
    out = DualQuatPoly(QuatPoly(1))
    while n:
        if n & 1:
            out = out * base
        base = base * base
        n >>= 1
    return out


def evaluate(node):
    """Flatten an expression tree to a :class:`DualQuatPoly`."""
    if isinstance(node, Num):
        return DualQuatPoly(QuatPoly(exact(node.value)))
    if isinstance(node, Sym):
        return _LEAVES[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.operand)
    if isinstance(node, Pow):
        return _power(evaluate(node.base), node.exponent)
    if isinstance(node, BinOp):
        a, b = evaluate(node.left), evaluate(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        return a * b
    raise TypeError(f"not an expression node: {node!r}")


def parse_motion(src):
    """Parse text into a :class:`DualQuatPoly` with exact rational coefficients."""
    return evaluate(parse_expr(src))


# -- printing ---------------------------------------------------------------

def format_qpoly(p):
    """Canonical text of a quaternion polynomial, parseable by :func:`parse_motion`."""
    terms = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c.is_zero():
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not mono:
            terms.append(f"({c})")
        elif c == QuatPoly(1).lc:
            terms.append(mono)
        else:
            terms.append(f"({c})*{mono}")
    return " + ".join(terms) if terms else "0"


def format_motion(c):
    """Canonical text ``P + eps*(D)`` of a dual quaternion polynomial."""
    c = getattr(c, "poly", c)
    primal = format_qpoly(c.primal)
    if c.dual.is_zero():
        return primal
    return f"{primal} + eps*({format_qpoly(c.dual)})"


_PREC = {"+": 1, "-": 1, "*": 2}


def to_source(node, parent=0):
    """Render an expression tree as text, parenthesizing only where needed."""
    if isinstance(node, Num):
        v = node.value
        text = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return f"({text})" if v < 0 else text
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Neg):
        text = "-" + to_source(node.operand, 3)
        return f"({text})" if parent > 2 else text
    if isinstance(node, Pow):
        return f"{to_source(node.base, 4)}^{node.exponent}"
    prec = _PREC[node.op]
    # left-associative: the right operand needs parentheses at equal precedence
    text = f"{to_source(node.left, prec)} {node.op} {to_source(node.right, prec + 1)}"
    return f"({text})" if prec < parent else text
