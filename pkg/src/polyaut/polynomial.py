"""Sparse multivariate polynomials with exact coefficients."""

from __future__ import annotations

from functools import total_ordering
from typing import Iterable, Mapping

from .fields import QQ, FFElement

Monomial = tuple[int, ...]


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial.  Compares below every number, supports no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "MINUS_INFINITY"

    def __str__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


def variable_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("X", "Y", "Z")[:n]
    return tuple(f"X{i}" for i in range(1, n + 1))


class PolynomialRing:
    """k[X1..Xn]; names are X, Y, Z for n <= 3 and X1..Xn beyond."""

    def __init__(self, field=QQ, n: int = 3):
        if n < 1:
            raise ValueError("a polynomial ring needs at least one variable")
        self.field = field
        self.n = n
        self.names = variable_names(n)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.n == self.n and other.field == self.field

    def __hash__(self):
        return hash((self.field, self.n))

    def __repr__(self):
        return f"{self.field}[{','.join(self.names)}]"

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        return Polynomial(self, {(0,) * self.n: self.field.coerce(c)})

    def gen(self, i: int) -> Polynomial:
        exps = [0] * self.n
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.field.one()})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.gen(i) for i in range(self.n))

    def monomial(self, exps: Iterable[int], coeff=1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.n or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps} for {self}")
        return Polynomial(self, {exps: self.field.coerce(coeff)})

    def parse(self, text: str) -> Polynomial:
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatchError(f"{value.ring} is not {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)


def _grlex_key(m: Monomial):
    return (sum(m), m)


class Polynomial:
    """Immutable polynomial: a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Mapping[Monomial, object]):
        self.ring = ring
        self._terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    @property
    def terms(self) -> dict[Monomial, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, m: Monomial):
        return self._terms.get(tuple(m), self.ring.field.zero())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        try:
            return self == self.ring.constant(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field.coerce(other)
            return Polynomial(self.ring, {m: a * c for m, a in self._terms.items()})
        other = self._coerce(other)
        terms: dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                terms[m] = terms[m] + c if m in terms else c
        return Polynomial(self.ring, terms)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def total_degree(self):
        if not self._terms:
            return MINUS_INFINITY
        return max(sum(m) for m in self._terms)

    def involves(self, i: int) -> bool:
        return any(m[i] for m in self._terms)

    def derivative(self, i: int) -> Polynomial:
        terms = {}
        for m, c in self._terms.items():
            e = m[i]
            if e:
                dm = m[:i] + (e - 1,) + m[i + 1 :]
                terms[dm] = c * e
        return Polynomial(self.ring, terms)

    def substitute(self, images) -> Polynomial:
        """Image under the ring endomorphism X_i -> images[i]."""
        images = list(images)
        if len(images) != self.ring.n:
            raise ValueError(f"expected {self.ring.n} images, got {len(images)}")
        if not images:
            return self
        target = images[0].ring if isinstance(images[0], Polynomial) else self.ring
        images = [target(g) for g in images]
        if target.field != self.ring.field:
            raise RingMismatchError(f"images over {target.field}, polynomial over {self.ring.field}")
        powers: list[dict[int, Polynomial]] = [{0: target.one(), 1: g} for g in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                half = power(i, e // 2)
                cache[e] = half * half if e % 2 == 0 else half * half * images[i]
            return cache[e]

        acc: dict[Monomial, object] = {}
        for m, c in self._terms.items():
            term = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            for tm, tc in term._terms.items():
                acc[tm] = acc[tm] + tc if tm in acc else tc
        return Polynomial(target, acc)

    def evaluate(self, point):
        field = self.ring.field
        point = [field.coerce(x) for x in point]
        total = field.zero()
        for m, c in self._terms.items():
            term = c
            for x, e in zip(point, m):
                if e:
                    term = term * x**e
            total = total + term
        return total

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        """Terms in graded lexicographic order, X1 > X2 > ..., largest first."""
        return sorted(self._terms.items(), key=lambda mc: _grlex_key(mc[0]), reverse=True)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.ring!r}, {format_polynomial(self)!r})"


def _format_monomial(m: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Canonical text in the parser's grammar, terms in graded lex order."""
    if not p:
        return "0"
    names = p.ring.names
    out = []
    for m, c in p.sorted_terms():
        mono = _format_monomial(m, names)
        if isinstance(c, FFElement):
            sign = "+"
            text = str(c)
            if mono:
                if " + " in text:
                    text = f"({text})"
                text = mono if text == "1" else f"{text}*{mono}"
        else:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                text = str(mag)
            elif mag == 1:
                text = mono
            else:
                text = f"{mag}*{mono}"
        if not out:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f" {sign} {text}")
    return "".join(out)
