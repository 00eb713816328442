"""Recursive-descent parser for the qarith expression language.

Grammar (lowest precedence first)::

    expr    := term  (('+' | '-' | '(+)' | 'u') term)*
    term    := unary (('*' | '/' | '(*)' | 't+') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?
    atom    := NUMBER | 'q' | '[' rational ']' ['_q'] | '{' [int (',' int)*] '}'
             | NAME '(' [expr (',' expr)*] ')' | '(' expr ')'

``(+)`` and ``(*)`` are quantum addition and multiplication; on sets ``(+)``
is a direct sum. ``[n]`` is the integer interval, ``[x]_q`` a quantum
number literal. ``k * S`` with an integer ``k`` dilates a set, ``k t+ S``
translates it, ``u`` is union and ``+`` the sumset.

Every expression is type-checked after parsing; an ill-typed tree raises
:class:`ExprTypeError` naming the offending node.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from ..errors import QArithError

FUNCTIONS = {"qint": 1, "qrat": 2, "genfun": 1, "subst": 2}


class ParseError(QArithError):
    def __init__(self, message: str, offset: int, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"syntax error at offset {offset}: {message}{detail}")


class ExprTypeError(QArithError):
    def __init__(self, message: str, path: str):
        self.path = path
        super().__init__(f"type error at {path}: {message}")


# -- tokens -------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<qop>\(\+\)|\(\*\))
  | (?P<qsuffix>_q\b)
  | (?P<translate>t\+)
  | (?P<number>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<punct>[-+*/^(),\[\]{}])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(src: str) -> list:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            text = m.group()
            if kind == "punct" or kind == "qop" or kind == "translate":
                kind = text
            elif kind == "qsuffix":
                kind = "_q"
            elif kind == "name" and text in ("q", "u"):
                kind = text
            tokens.append(Token(kind, text, pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(src)))
    return tokens


# -- AST ----------------------------------------------------------------------

class Type(Enum):
    NUM = "number"
    POLY = "polynomial"
    FRAC = "rational function"
    QNUM = "quantum number"
    SET = "set"


@dataclass(frozen=True)
class Num:
    value: int
    offset: int = 0


@dataclass(frozen=True)
class Var:
    offset: int = 0


@dataclass(frozen=True)
class IntervalLit:
    n: "Node"
    offset: int = 0


@dataclass(frozen=True)
class QuantumLit:
    value: "Node"
    offset: int = 0


@dataclass(frozen=True)
class SetLit:
    elements: tuple
    offset: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    offset: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    offset: int = 0


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    offset: int = 0


Node = object  # any of the dataclasses above


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail([kind])
        return self.advance()

    def fail(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"unexpected {found}", t.offset, expected)

    def parse(self):
        node = self.expr()
        if self.tok.kind != "eof":
            self.fail(["+", "-", "(+)", "u", "t+", "*", "/", "(*)", "^", "eof"])
        return node

    def expr(self):
        node = self.term()
        while self.tok.kind in ("+", "-", "(+)", "u"):
            op = self.advance()
            node = BinOp(op.kind, node, self.term(), op.offset)
        return node

    def term(self):
        node = self.unary()
        while self.tok.kind in ("*", "/", "(*)", "t+"):
            op = self.advance()
            node = BinOp(op.kind, node, self.unary(), op.offset)
        return node

    def unary(self):
        if self.tok.kind == "-":
            op = self.advance()
            return Neg(self.unary(), op.offset)
        return self.power()

    def power(self):
        node = self.atom()
        if self.tok.kind == "^":
            op = self.advance()
            node = BinOp("^", node, self.unary(), op.offset)
        return node

    def atom(self):
        t = self.tok
        if t.kind == "number":
            self.advance()
            return Num(int(t.text), t.offset)
        if t.kind == "q":
            self.advance()
            return Var(t.offset)
        if t.kind == "[":
            self.advance()
            inner = self.expr()
            self.expect("]")
            if self.tok.kind == "_q":
                self.advance()
                return QuantumLit(inner, t.offset)
            return IntervalLit(inner, t.offset)
        if t.kind == "{":
            self.advance()
            elements = []
            if self.tok.kind != "}":
                elements.append(self.set_element())
                while self.tok.kind == ",":
                    self.advance()
                    elements.append(self.set_element())
            self.expect("}")
            return SetLit(tuple(elements), t.offset)
        if t.kind == "name":
            if t.text not in FUNCTIONS:
                raise ParseError(f"unknown function {t.text!r}", t.offset, FUNCTIONS)
            self.advance()
            self.expect("(")
            args = []
            if self.tok.kind != ")":
                args.append(self.expr())
                while self.tok.kind == ",":
                    self.advance()
                    args.append(self.expr())
            self.expect(")")
            if len(args) != FUNCTIONS[t.text]:
                raise ParseError(
                    f"{t.text} takes {FUNCTIONS[t.text]} argument(s), got {len(args)}", t.offset
                )
            return Call(t.text, tuple(args), t.offset)
        if t.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        self.fail(["number", "q", "[", "{", "(", "-", *FUNCTIONS])

    def set_element(self) -> int:
        sign = 1
        if self.tok.kind == "-":
            self.advance()
            sign = -1
        return sign * int(self.expect("number").text)


# -- static types -------------------------------------------------------------

_NUMERIC = (Type.NUM, Type.POLY, Type.FRAC)
_RANK = {Type.NUM: 0, Type.POLY: 1, Type.FRAC: 2}


def _join(a: Type, b: Type) -> Type:
    return a if _RANK[a] >= _RANK[b] else b


def infer_type(node, path: str = "$") -> Type:
    """Static type of *node*; raises :class:`ExprTypeError` when ill-typed."""
    if isinstance(node, Num):
        return Type.NUM
    if isinstance(node, Var):
        return Type.POLY
    if isinstance(node, SetLit):
        return Type.SET
    if isinstance(node, IntervalLit):
        _require(node.n, f"{path}.n", Type.NUM)
        return Type.SET
    if isinstance(node, QuantumLit):
        _require(node.value, f"{path}.value", Type.NUM)
        return Type.QNUM
    if isinstance(node, Neg):
        t = infer_type(node.operand, f"{path}.operand")
        if t not in _NUMERIC and t is not Type.QNUM:
            raise ExprTypeError(f"cannot negate a {t.value}", path)
        return t
    if isinstance(node, Call):
        return _infer_call(node, path)
    if isinstance(node, BinOp):
        return _infer_binop(node, path)
    raise ExprTypeError(f"unknown node {node!r}", path)


def _require(node, path: str, *allowed: Type) -> Type:
    t = infer_type(node, path)
    if t not in allowed:
        names = " or ".join(a.value for a in allowed)
        raise ExprTypeError(f"expected {names}, got {t.value}", path)
    return t


def _infer_call(node: Call, path: str) -> Type:
    args = [f"{path}.args[{i}]" for i in range(len(node.args))]
    if node.name == "qint":
        _require(node.args[0], args[0], Type.NUM)
        return Type.QNUM
    if node.name == "qrat":
        _require(node.args[0], args[0], Type.NUM)
        _require(node.args[1], args[1], Type.NUM)
        return Type.QNUM
    if node.name == "genfun":
        _require(node.args[0], args[0], Type.SET)
        return Type.POLY
    # subst(p, r)
    t = _require(node.args[0], args[0], *_NUMERIC)
    _require(node.args[1], args[1], Type.NUM)
    return _join(t, Type.POLY) if t is not Type.NUM else Type.NUM


def _infer_binop(node: BinOp, path: str) -> Type:
    lp, rp = f"{path}.left", f"{path}.right"
    op = node.op
    left = infer_type(node.left, lp)
    right = infer_type(node.right, rp)

    if op in ("(+)", "(*)"):
        if left is Type.QNUM and right is Type.QNUM:
            return Type.QNUM
        if op == "(+)" and left is Type.SET and right is Type.SET:
            return Type.SET
        raise ExprTypeError(f"{op} needs two quantum numbers{' or two sets' if op == '(+)' else ''}, "
                            f"got {left.value} and {right.value}", path)
    if op in ("u", "t+"):
        if op == "u" and left is Type.SET and right is Type.SET:
            return Type.SET
        if op == "t+" and left is Type.NUM and right is Type.SET:
            return Type.SET
        want = "two sets" if op == "u" else "a number and a set"
        raise ExprTypeError(f"{op} needs {want}, got {left.value} and {right.value}", path)
    if op == "+" and left is Type.SET and right is Type.SET:
        return Type.SET
    if op == "*" and left is Type.NUM and right is Type.SET:
        return Type.SET
    if op == "^":
        if left not in (Type.NUM, Type.POLY):
            raise ExprTypeError(f"cannot exponentiate a {left.value}", lp)
        if right is not Type.NUM:
            raise ExprTypeError("exponent must be a number", rp)
        return left
    if left in _NUMERIC and right in _NUMERIC:
        t = _join(left, right)
        if op == "/" and t is Type.POLY and right is not Type.NUM:
            return Type.FRAC
        return t
    raise ExprTypeError(f"{op!r} is not defined for {left.value} and {right.value}", path)


def parse_expr(src: str):
    """Parse and type-check *src*. Returns the AST root."""
    node = _Parser(src).parse()
    infer_type(node)
    return node
