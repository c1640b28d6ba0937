"""
Recursive descent parser for the expression language

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := '-' unary | power
    power := atom ('^' unary)?
    atom  := number | 'x' | func '(' expr ')' | '(' expr ')'

'^' is right associative and binds tighter than unary minus, so -x^2 is -(x^2).
Functions are exp, ln, sin, cos, sqrt, erf and abs. Rational exponents are
written with parentheses, e.g. x^(7/6).
"""
import math
import re
from dataclasses import dataclass
from typing import List

from .ast import BINARY_BUILDERS, FUNCTIONS, X, Expr, call, const, neg


class ExprSyntaxError(ValueError):
    """
    Syntax error in an expression. `offset` is the byte offset into the UTF-8
    encoded source where parsing failed.
    """

    def __init__(self, message: str, offset: int, source: str = "") -> None:
        self.message = message
        self.offset = offset
        self.source = source
        super().__init__(f"{message} at offset {offset}")


class UnknownFunctionError(ExprSyntaxError):
    pass


@dataclass
class Token:
    kind: str
    """one of num, name, op, end"""
    text: str
    offset: int


_TOKEN_RE = re.compile(
    r"""
    (?P<space>\s+)
    | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
    | (?P<name>[A-Za-z_]\w*)
    | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


def _byte_offset(source: str, index: int) -> int:
    return len(source[:index].encode("utf-8"))


def tokenize(source: str) -> List[Token]:
    tokens = []
    idx = 0
    while idx < len(source):
        m = _TOKEN_RE.match(source, idx)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {source[idx]!r}", _byte_offset(source, idx), source)
        if m.lastgroup != "space":
            tokens.append(Token(m.lastgroup, m.group(), _byte_offset(source, idx)))
        idx = m.end()
    tokens.append(Token("end", "", _byte_offset(source, len(source))))
    return tokens


class Parser:
    def __init__(self, source: str) -> None:
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "end":
            self.pos += 1
        return tok

    def error(self, expected: str, tok: Token = None) -> ExprSyntaxError:
        tok = tok or self.peek()
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return ExprSyntaxError(f"expected {expected}, found {found}", tok.offset, self.source)

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != text:
            raise self.error(repr(text))
        return self.advance()

    def at_op(self, *ops: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text in ops

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek().kind != "end":
            raise self.error("an operator or end of input")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            e = BINARY_BUILDERS[op](e, self.term())
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.at_op("*", "/"):
            op = self.advance().text
            e = BINARY_BUILDERS[op](e, self.unary())
        return e

    def unary(self) -> Expr:
        if self.at_op("-"):
            self.advance()
            return neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.at_op("^"):
            self.advance()
            return BINARY_BUILDERS["^"](base, self.unary())
        return base

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            value = float(tok.text)
            if not math.isfinite(value):
                raise ExprSyntaxError(f"number {tok.text!r} is out of range", tok.offset, self.source)
            return const(value)
        if tok.kind == "name":
            self.advance()
            if tok.text == "x":
                return X
            if not self.at_op("("):
                raise ExprSyntaxError(f"unknown variable {tok.text!r}, only 'x' is allowed", tok.offset, self.source)
            if tok.text not in FUNCTIONS:
                raise UnknownFunctionError(
                    f"unknown function {tok.text!r}, known functions are {', '.join(FUNCTIONS)}",
                    tok.offset,
                    self.source,
                )
            self.advance()
            arg = self.expr()
            self.expect(")")
            return call(tok.text, arg)
        if self.at_op("("):
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        raise self.error("a number, 'x', a function call or '('")


def parse(source: str) -> Expr:
    """Parse the source text of f(x) into an expression tree"""
    if not source or not source.strip():
        raise ExprSyntaxError("empty expression", 0, source)
    return Parser(source).parse()
