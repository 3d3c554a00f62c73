"""Recursive-descent parser for polynomial expressions, map and derivation literals.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*")? unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT ("/" INT)? | VARIABLE | "t" | "(" expr ")"

Variables are ``X``, ``Y``, ``Z`` (rings with at most three variables) and
``X1`` .. ``Xn``.  Juxtaposition multiplies when the right factor starts with
a name or a parenthesis, so ``8X`` and ``(1/2)Z`` are accepted; ``2 3`` is not.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .fields import CoefficientError
from .polynomial import Polynomial, PolynomialRing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/(),;\[\]]))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN.match(text, pos)
        if not match:
            start = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _variable_index(name: str, ring: PolynomialRing) -> int | None:
    if name in ring.names:
        return ring.names.index(name)
    m = re.fullmatch(r"X([1-9]\d*)", name)
    if m and int(m.group(1)) <= ring.n:
        return int(m.group(1)) - 1
    return None


class _Parser:
    def __init__(self, text: str, ring: PolynomialRing):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, value=None):
        tok = self.tokens[self.i]
        if value is not None and tok[1] != value:
            shown = tok[1] or "end of input"
            raise ParseError(f"expected {value!r}, found {shown!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        result = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.unary()
        while True:
            kind, value, _ = self.peek()
            if value == "*":
                self.take()
            elif kind != "name" and value != "(":
                return result
            result = result * self.unary()

    def unary(self) -> Polynomial:
        if self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            value = self.unary()
            return value if op == "+" else -value
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, value, pos = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer literal", pos)
            base = base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value, pos = self.take()
        if kind == "num":
            number = Fraction(int(value))
            if self.peek()[1] == "/":
                self.take()
                dkind, dvalue, dpos = self.take()
                if dkind != "num":
                    raise ParseError("expected a denominator", dpos)
                if int(dvalue) == 0:
                    raise ParseError("zero denominator", dpos)
                number = Fraction(int(value), int(dvalue))
            try:
                return self.ring.constant(number)
            except CoefficientError as exc:
                raise ParseError(str(exc), pos) from None
        if kind == "name":
            if value == "t":
                try:
                    return self.ring.constant(self.ring.field.generator())
                except CoefficientError as exc:
                    raise ParseError(str(exc), pos) from None
            index = _variable_index(value, self.ring)
            if index is None:
                raise ParseError(f"unknown variable {value!r} in {self.ring}", pos)
            return self.ring.gen(index)
        if value == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {value or 'end of input'!r}", pos)


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    parser = _Parser(text, ring)
    result = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected {value!r}", pos)
    return result


def split_top_level(text: str, sep: str) -> list[tuple[str, int]]:
    """Split on ``sep`` outside brackets; returns (piece, offset) pairs."""
    pieces, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            pieces.append((text[start:i], start))
            start = i + 1
    pieces.append((text[start:], start))
    return pieces


def _parse_tuple(text: str, ring: PolynomialRing, opener: str, closer: str, sep: str):
    stripped = text.strip()
    offset = text.index(stripped[0]) if stripped else 0
    if not (stripped.startswith(opener) and stripped.endswith(closer)):
        raise ParseError(f"literal must be enclosed in {opener}{closer}", offset)
    body = stripped[1:-1]
    pieces = split_top_level(body, sep)
    if len(pieces) != ring.n:
        raise ParseError(f"expected {ring.n} components, found {len(pieces)}", offset)
    out = []
    for piece, at in pieces:
        try:
            out.append(parse_polynomial(piece, ring))
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" at position", 1)[0], offset + 1 + at + exc.position) from None
    return out


def parse_map_components(text: str, ring: PolynomialRing) -> list[Polynomial]:
    """Components of a map literal ``(e1, ..., en)``."""
    return _parse_tuple(text, ring, "(", ")", ",")


def parse_derivation_images(text: str, ring: PolynomialRing) -> list[Polynomial]:
    """Images of a derivation literal ``[e1; ...; en]``."""
    return _parse_tuple(text, ring, "[", "]", ";")
