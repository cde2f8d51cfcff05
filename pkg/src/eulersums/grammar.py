"""Text grammar for Euler sums and closed-form expressions.

    expr    := term (("+" | "-") term)*
    term    := ["+" | "-"] factor (("*" | "/") factor)*
    factor  := primary ["^" integer]
    primary := integer | atom | "(" expr ")"
    atom    := "z" int | "zb" int | "ln2" | "pi" | "Li" int "(1/2)" | sum
    sum     := "S(" [arg ("," arg)*] ";" arg ")"      arg := ["b"] int

Whitespace is ignored.  ``render`` in :mod:`eulersums.symbolic` produces text
this parser reads back to the same expression.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .sums import DivergentSum, SumSignature
from .symbolic import Atom, Expression

__all__ = ["ParseError", "parse_expr", "parse_signature", "parse_equation"]


class ParseError(ValueError):
    """Malformed input; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.position = position
        self.text = text
        where = f" at position {position}" if text else ""
        super().__init__(f"{message}{where}")


@dataclass(frozen=True)
class Token:
    kind: str
    value: object
    pos: int


_SUM_RE = re.compile(r"S\(\s*((?:b?\s*\d+\s*(?:,\s*b?\s*\d+\s*)*)?);\s*(b?\s*\d+)\s*\)")
_LI_RE = re.compile(r"Li(\d+)\(\s*1\s*/\s*2\s*\)")
_SIMPLE = [
    ("zetabar", re.compile(r"zb(\d+)")),
    ("zeta", re.compile(r"z(\d+)")),
    ("ln2", re.compile(r"ln2")),
    ("pi", re.compile(r"pi")),
    ("int", re.compile(r"\d+")),
]


def _arg(text: str) -> tuple[int, bool]:
    text = text.replace(" ", "")
    if text.startswith("b"):
        return int(text[1:]), True
    return int(text), False


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if text.startswith("==", i):
            tokens.append(Token("eq", None, i))
            i += 2
            continue
        if ch == "S":
            m = _SUM_RE.match(text, i)
            if not m:
                raise ParseError("malformed sum, expected S(args;arg)", text, i)
            inner = [_arg(a) for a in m.group(1).split(",")] if m.group(1).strip() else []
            outer = _arg(m.group(2))
            tokens.append(Token("sum", (tuple(inner), outer), i))
            i = m.end()
            continue
        if text.startswith("Li", i):
            m = _LI_RE.match(text, i)
            if not m:
                raise ParseError("malformed polylog, expected Li<k>(1/2)", text, i)
            tokens.append(Token("lihalf", int(m.group(1)), i))
            i = m.end()
            continue
        for kind, rx in _SIMPLE:
            m = rx.match(text, i)
            if m:
                val = int(m.group(1)) if kind in ("zeta", "zetabar") else (int(m.group(0)) if kind == "int" else None)
                tokens.append(Token(kind, val, i))
                i = m.end()
                break
        else:
            if ch in "+-*/^()":
                tokens.append(Token(ch, None, i))
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(Token("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self, kind: str | None = None) -> Token:
        tok = self.tokens[self.i]
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.kind!r}", self.text, tok.pos)
        self.i += 1
        return tok

    def expr(self) -> Expression:
        out = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> Expression:
        sign = 1
        while self.peek().kind in ("+", "-"):
            if self.take().kind == "-":
                sign = -sign
        out = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op.kind == "*":
                out = out * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("can only divide by a nonzero number", self.text, op.pos)
                out = out / rhs.constant_value()
        return out * sign

    def factor(self) -> Expression:
        base = self.primary()
        if self.peek().kind == "^":
            self.take()
            tok = self.take("int")
            base = base ** tok.value
        return base

    def primary(self) -> Expression:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return Expression.constant(tok.value)
        if tok.kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if tok.kind in ("zeta", "zetabar", "ln2", "pi", "lihalf", "sum"):
            self.take()
            return Expression.atom(self.atom(tok))
        raise ParseError(f"unexpected {tok.kind!r}", self.text, tok.pos)

    def atom(self, tok: Token) -> Atom:
        try:
            if tok.kind == "zeta":
                return Atom.zeta(tok.value)
            if tok.kind == "zetabar":
                return Atom.zetabar(tok.value)
            if tok.kind == "ln2":
                return Atom.ln2()
            if tok.kind == "pi":
                return Atom.pi()
            if tok.kind == "lihalf":
                return Atom.li_half(tok.value)
            return Atom.euler_sum(self.signature(tok))
        except ParseError:
            raise
        except ValueError as exc:
            raise ParseError(str(exc), self.text, tok.pos) from None

    def signature(self, tok: Token) -> SumSignature:
        inner, (q, qbar) = tok.value
        try:
            return SumSignature(tuple(inner), q, qbar)
        except DivergentSum as exc:
            raise SignatureError(
                f"{exc}; convergence rule: an unbarred outer exponent must be at least 2",
                self.text,
                tok.pos,
            ) from None


class SignatureError(ParseError):
    """Well-formed text naming a sum that does not converge."""


def parse_expr(text: str) -> Expression:
    p = _Parser(text)
    if p.peek().kind == "end":
        raise ParseError("empty expression", text, 0)
    out = p.expr()
    p.take("end")
    return out


def parse_signature(text: str) -> SumSignature:
    """Parse a single ``S(...)`` term."""
    p = _Parser(text)
    tok = p.take("sum")
    p.take("end")
    return p.signature(tok)


def parse_equation(text: str) -> tuple[Expression, Expression]:
    """Parse ``lhs == rhs``."""
    p = _Parser(text)
    lhs = p.expr()
    p.take("eq")
    rhs = p.expr()
    p.take("end")
    return lhs, rhs
