"""Recursive-descent parser for the expression language.

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' ['-'] integer)?
    atom   := rational | 'q' | symbol | call | '(' expr ')'
    call   := name '(' expr (',' expr)* ')'

Juxtaposition is not multiplication. Symbols and function names are resolved
at evaluation time.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

MAX_DEPTH = 100
MAX_DIGITS = 1000


class ParseError(Exception):
    def __init__(self, message: str, position: int, expected: frozenset[str] = frozenset()):
        super().__init__(message)
        self.message = message
        self.position = position
        self.expected = expected

    def __str__(self):
        exp = f" (expected {', '.join(sorted(self.expected))})" if self.expected else ""
        return f"parse error at position {self.position}: {self.message}{exp}"


# -- syntax tree ------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class QScalar:
    pass


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Diff:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Prod:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Expr", ...]


Expr = Union[Num, QScalar, Sym, Sum, Diff, Prod, Neg, Pow, Call]


# -- tokenizer ----------------------------------------------------------------------

_TOKEN = re.compile(r"(?P<num>[0-9]+(?:/[0-9]+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^(),])")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        m = _TOKEN.match(src, i)
        if not m:
            raise ParseError(f"unexpected character {ch!r}", i,
                             frozenset({"number", "name", "+", "-", "*", "^", "(", ")", ","}))
        kind = m.lastgroup
        if kind == "num" and len(m.group(0)) > MAX_DIGITS:
            raise ParseError("numeric literal too long", i)
        tokens.append(Token(kind, m.group(0), i))
        i = m.end()
    tokens.append(Token("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str) -> Token:
        if self.tok.kind == "op" and self.tok.text == op:
            return self.advance()
        raise ParseError(f"unexpected {self._describe()}", self.tok.pos, frozenset({op}))

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "end" else repr(self.tok.text)

    def _enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError("expression nested too deeply", self.tok.pos)

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self._describe()}", self.tok.pos,
                             frozenset({"+", "-", "*", "^", "end of input"}))
        return e

    def expr(self) -> Expr:
        self._enter()
        left = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            right = self.term()
            left = Sum(left, right) if op == "+" else Diff(left, right)
        self.depth -= 1
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self.tok.kind == "op" and self.tok.text == "*":
            self.advance()
            left = Prod(left, self.unary())
        return left

    def unary(self) -> Expr:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            self._enter()
            e = Neg(self.unary())
            self.depth -= 1
            return e
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            sign = 1
            if self.tok.kind == "op" and self.tok.text == "-":
                self.advance()
                sign = -1
            if self.tok.kind != "num" or "/" in self.tok.text:
                raise ParseError(f"unexpected {self._describe()}", self.tok.pos, frozenset({"integer"}))
            return Pow(base, sign * int(self.advance().text))
        return base

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self.advance()
            num, _, den = t.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", t.pos)
            return Num(Fraction(int(num), int(den) if den else 1))
        if t.kind == "name":
            self.advance()
            if self.tok.kind == "op" and self.tok.text == "(":
                self.advance()
                args = [self.expr()]
                while self.tok.kind == "op" and self.tok.text == ",":
                    self.advance()
                    args.append(self.expr())
                self.expect_op(")")
                return Call(t.text, tuple(args))
            return QScalar() if t.text == "q" else Sym(t.text)
        if t.kind == "op" and t.text == "(":
            self.advance()
            e = self.expr()
            self.expect_op(")")
            return e
        raise ParseError(f"unexpected {self._describe()}", t.pos,
                         frozenset({"number", "name", "(", "-"}))


def parse(src: str) -> Expr:
    return _Parser(src).parse()


# -- printing ------------------------------------------------------------------------

_PREC = {Sum: 1, Diff: 1, Prod: 2, Neg: 3, Pow: 4}


def _prec(e: Expr) -> int:
    return _PREC.get(type(e), 5)


def pretty(e: Expr) -> str:
    """Minimal-parenthesis rendering; parse(pretty(e)) == e for parsed trees."""
    def wrap(sub: Expr, min_prec: int) -> str:
        s = pretty(sub)
        return f"({s})" if _prec(sub) < min_prec else s

    if isinstance(e, Num):
        v = e.value
        s = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return f"({s})" if v < 0 else s
    if isinstance(e, QScalar):
        return "q"
    if isinstance(e, Sym):
        return e.name
    if isinstance(e, Sum):
        return f"{wrap(e.left, 1)} + {wrap(e.right, 2)}"
    if isinstance(e, Diff):
        return f"{wrap(e.left, 1)} - {wrap(e.right, 2)}"
    if isinstance(e, Prod):
        return f"{wrap(e.left, 2)}*{wrap(e.right, 3)}"
    if isinstance(e, Neg):
        return f"-{wrap(e.operand, 3)}"
    if isinstance(e, Pow):
        return f"{wrap(e.base, 5)}^{e.exponent}"
    if isinstance(e, Call):
        return f"{e.name}({', '.join(pretty(a) for a in e.args)})"
    raise TypeError(f"not an expression node: {e!r}")


def normalize(src: str) -> str:
    """Canonical spelling of an expression."""
    return pretty(parse(src))
