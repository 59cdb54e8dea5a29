"""Recursive-descent parser for the textual L-parameter notation.

::

    lparam   := segment ( "+" segment )*
    segment  := "[" INT ";" rho ";" RATIONAL "]"
    rho      := NAME ( "(" INT ")" )?
    RATIONAL := ("-")? INT ( "/" INT )?

Whitespace is allowed between any two tokens. Example:
``"[2;triv;0] + [1;chi5(1);3/2]"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InvalidSegment, LParamOverflowError, LParamSyntaxError
from .lparam import GaloisTypeLabel, Segment

INT64_MAX = 2**63 - 1

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<INT>[0-9]+)|(?P<NAME>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[\[\];()+/-])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, a punctuation character, EOF, or ERROR
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            tokens.append(Token("ERROR", text[pos], line, col))
            return tokens
        chunk = m.group()
        if m.lastgroup != "ws":
            kind = m.group("punct") or m.lastgroup
            tokens.append(Token(kind, chunk, line, col))
        for ch in chunk:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    tokens.append(Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected: Iterable[str], tok: Token | None = None):
        tok = tok or self.tok
        expected = sorted(set(expected))
        if tok.kind == "EOF":
            found = "end of input"
        elif tok.kind == "ERROR":
            found = f"unexpected character {tok.text!r}"
        else:
            found = repr(tok.text)
        raise LParamSyntaxError(
            f"expected {' or '.join(expected)} at line {tok.line}, column {tok.column}, found {found}",
            (tok.line, tok.column),
            expected,
        )

    def expect(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            self.fail([kind])
        self.i += 1
        return tok

    def integer(self) -> tuple[int, Token]:
        tok = self.expect("INT")
        value = int(tok.text)
        if value > INT64_MAX:
            raise LParamOverflowError(
                f"integer {tok.text} at line {tok.line}, column {tok.column} exceeds 64 bits",
                (tok.line, tok.column),
            )
        return value, tok

    def lparam(self) -> list[Segment]:
        segs = [self.segment()]
        while self.tok.kind == "+":
            self.i += 1
            segs.append(self.segment())
        if self.tok.kind != "EOF":
            self.fail(["+", "EOF"])
        return segs

    def segment(self) -> Segment:
        self.expect("[")
        sl2_dim, sl2_tok = self.integer()
        self.expect(";")
        rho = self.rho()
        self.expect(";")
        exponent = self.rational()
        self.expect("]")
        try:
            return Segment(sl2_dim, rho, exponent)
        except InvalidSegment as exc:
            exc.position = (sl2_tok.line, sl2_tok.column)
            raise

    def rho(self) -> GaloisTypeLabel:
        name_tok = self.expect("NAME")
        dim = 1
        if self.tok.kind == "(":
            self.i += 1
            dim, _ = self.integer()
            self.expect(")")
        elif self.tok.kind != ";":
            self.fail(["(", ";"])
        try:
            return GaloisTypeLabel(name_tok.text, dim)
        except InvalidSegment as exc:
            exc.position = (name_tok.line, name_tok.column)
            raise

    def rational(self) -> Fraction:
        sign = 1
        if self.tok.kind == "-":
            sign = -1
            self.i += 1
        elif self.tok.kind != "INT":
            self.fail(["-", "INT"])
        num, _ = self.integer()
        den = 1
        if self.tok.kind == "/":
            self.i += 1
            den, den_tok = self.integer()
            if den == 0:
                raise LParamSyntaxError(
                    f"zero denominator at line {den_tok.line}, column {den_tok.column}",
                    (den_tok.line, den_tok.column),
                    ["nonzero INT"],
                )
        elif self.tok.kind != "]":
            self.fail(["/", "]"])
        return Fraction(sign * num, den)


def parse_lparam(text: str) -> list[Segment]:
    """Parse the segment list of a parameter; ``n`` and ``d`` are supplied separately.

    Raises:
        LParamSyntaxError: with 1-based ``position`` and the ``expected`` token set.
        LParamOverflowError: an integer literal beyond 64-bit magnitude.
        InvalidSegment: a zero SL_2 or representation dimension.
    """
    return _Parser(text).lparam()


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_segment(s: Segment) -> str:
    rho = s.rho.name if s.rho.dim == 1 else f"{s.rho.name}({s.rho.dim})"
    return f"[{s.sl2_dim};{rho};{format_rational(s.exponent)}]"


def format_lparam(segments: Iterable[Segment]) -> str:
    return " + ".join(format_segment(s) for s in segments)
