"""Polynomial maps, their composition and pullback, and words in invertible generators.

Composition follows the usual convention for maps of points:
``compose(F, G)`` is F after G, so ``compose(F, G)(x) == F(G(x))`` and its
components are the components of F with G substituted in.  Pullback is the
substitution endomorphism ``p -> p(F_1, ..., F_n)``; it is contravariant:
``pullback(compose(F, G), p) == pullback(G, pullback(F, p))``.

Identities written as products of substitution endomorphisms (operators on
the polynomial ring, composed as operators) use :func:`endomorphism_product`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import inverse_matrix
from .parsing import parse_map_components
from .polynomial import Polynomial, PolynomialRing, RingMismatchError, format_polynomial


class PolyMap:
    """An n-tuple of polynomials in n variables; component i is the image of X_i."""

    __slots__ = ("ring", "components")

    def __init__(self, components: Sequence[Polynomial], ring: PolynomialRing | None = None):
        components = tuple(components)
        if ring is None:
            if not components:
                raise ValueError("a map needs at least one component")
            ring = components[0].ring
        components = tuple(ring(c) for c in components)
        if len(components) != ring.n:
            raise ValueError(f"{ring} needs {ring.n} components, got {len(components)}")
        self.ring = ring
        self.components = components

    @classmethod
    def parse(cls, text: str, ring: PolynomialRing) -> PolyMap:
        return cls(parse_map_components(text, ring), ring)

    def __eq__(self, other):
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.ring == other.ring and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __call__(self, point):
        """Evaluate at a point of k^n."""
        return tuple(c.evaluate(point) for c in self.components)

    def degree(self) -> int:
        return max((c.total_degree() for c in self.components if c), default=0)

    def compose(self, other: PolyMap) -> PolyMap:
        return compose(self, other)

    def pullback(self, p: Polynomial) -> Polynomial:
        return pullback(self, p)

    def power(self, m: int) -> PolyMap:
        if m < 0:
            raise ValueError("general inversion is not available; use AutWord.inverse()")
        result = identity(self.ring)
        for _ in range(m):
            result = compose(result, self)
        return result

    def is_identity(self) -> bool:
        return self == identity(self.ring)

    def diagonal_entries(self):
        """Entries d with self == diagonal(d), or None if the map is not diagonal linear."""
        entries = []
        for i, comp in enumerate(self.components):
            items = list(comp.items())
            if len(items) != 1:
                return None
            mono, c = items[0]
            if mono != tuple(1 if j == i else 0 for j in range(self.ring.n)):
                return None
            entries.append(c)
        return tuple(entries)

    def __str__(self):
        return "(" + ", ".join(format_polynomial(c) for c in self.components) + ")"

    def __repr__(self):
        return f"PolyMap{self}"


def _check(F: PolyMap, G: PolyMap):
    if F.ring != G.ring:
        raise RingMismatchError(f"{F.ring} vs {G.ring}")


def compose(F: PolyMap, G: PolyMap) -> PolyMap:
    """F after G: (F o G)(x) = F(G(x))."""
    _check(F, G)
    return PolyMap([c.substitute(G.components) for c in F.components], F.ring)


def compose_all(*maps: PolyMap) -> PolyMap:
    """maps[0] o maps[1] o ... o maps[-1]."""
    result = maps[-1]
    for F in reversed(maps[:-1]):
        result = compose(F, result)
    return result


def endomorphism_product(*maps: PolyMap) -> PolyMap:
    """The map whose pullback is pullback(maps[0]) o pullback(maps[1]) o ...

    Reading each map as the ring endomorphism it induces and multiplying those
    left to right gives the point maps composed in reverse order.
    """
    return compose_all(*reversed(maps))


def pullback(F: PolyMap, p: Polynomial) -> Polynomial:
    if F.ring != p.ring:
        raise RingMismatchError(f"{F.ring} vs {p.ring}")
    return p.substitute(F.components)


def identity(ring: PolynomialRing) -> PolyMap:
    return PolyMap(ring.gens(), ring)


def diagonal(ring: PolynomialRing, entries) -> PolyMap:
    entries = [ring.field.coerce(d) for d in entries]
    if len(entries) != ring.n:
        raise ValueError(f"expected {ring.n} diagonal entries")
    if any(not d for d in entries):
        raise ValueError("diagonal entries must be nonzero")
    return PolyMap([g * d for g, d in zip(ring.gens(), entries)], ring)


def elementary(index: int, f: Polynomial) -> PolyMap:
    """(X_1, ..., X_index + f, ..., X_n) with f free of X_index (0-based index)."""
    ring = f.ring
    if not 0 <= index < ring.n:
        raise IndexError(f"variable index {index} out of range for {ring}")
    if f.involves(index):
        raise ValueError(f"{f} involves {ring.names[index]}")
    comps = list(ring.gens())
    comps[index] = comps[index] + f
    return PolyMap(comps, ring)


def affine(ring: PolynomialRing, matrix, translation=None) -> PolyMap:
    """x -> A x + b."""
    field = ring.field
    gens = ring.gens()
    if translation is None:
        translation = [0] * ring.n
    comps = []
    for row, b in zip(matrix, translation):
        comp = ring.constant(b)
        for a, g in zip(row, gens):
            comp = comp + g * field.coerce(a)
        comps.append(comp)
    return PolyMap(comps, ring)


def tame_identity_witness(f: Polynomial) -> tuple[PolyMap, PolyMap]:
    """Both sides of E_f = L^-1 o (E_-2f o L o E_2f) with L = (2X_1, X_2, ..., X_n)."""
    ring = f.ring
    if ring.field.characteristic == 2:
        raise ValueError("the identity needs 2 to be invertible (characteristic 2 field)")
    two = ring.field.coerce(2)
    L = diagonal(ring, [two] + [1] * (ring.n - 1))
    L_inv = diagonal(ring, [ring.field.one() / two] + [1] * (ring.n - 1))
    lhs = elementary(0, f)
    rhs = compose_all(L_inv, elementary(0, f * -2), L, elementary(0, f * 2))
    return lhs, rhs


# --- automorphism words -------------------------------------------------------


@dataclass(frozen=True)
class Elementary:
    index: int
    f: Polynomial
    inverse: bool = False

    def inverted(self):
        return Elementary(self.index, self.f, not self.inverse)

    def realize(self, ring: PolynomialRing) -> PolyMap:
        f = ring(self.f)
        return elementary(self.index, -f if self.inverse else f)


@dataclass(frozen=True)
class Diagonal:
    entries: tuple
    inverse: bool = False

    def inverted(self):
        return Diagonal(self.entries, not self.inverse)

    def realize(self, ring: PolynomialRing) -> PolyMap:
        entries = [ring.field.coerce(d) for d in self.entries]
        if self.inverse:
            entries = [ring.field.one() / d for d in entries]
        return diagonal(ring, entries)


@dataclass(frozen=True)
class Affine:
    matrix: tuple
    translation: tuple
    inverse: bool = False

    def inverted(self):
        return Affine(self.matrix, self.translation, not self.inverse)

    def realize(self, ring: PolynomialRing) -> PolyMap:
        field = ring.field
        A = [[field.coerce(a) for a in row] for row in self.matrix]
        b = [field.coerce(x) for x in self.translation]
        if not self.inverse:
            return affine(ring, A, b)
        A_inv = inverse_matrix(A, field.one())
        b_inv = [-sum((a * x for a, x in zip(row, b)), field.zero()) for row in A_inv]
        return affine(ring, A_inv, b_inv)


@dataclass(frozen=True)
class ExpLND:
    derivation: object
    lam: object
    inverse: bool = False
    bound: int = 64

    def inverted(self):
        return ExpLND(self.derivation, self.lam, not self.inverse, self.bound)

    def realize(self, ring: PolynomialRing) -> PolyMap:
        from .derivations import exp_lnd

        lam = ring.field.coerce(self.lam)
        return exp_lnd(self.derivation, -lam if self.inverse else lam, self.bound)


class AutWord:
    """A word in invertible generators; realizes to token_0 o token_1 o ..."""

    def __init__(self, tokens=()):
        self.tokens = tuple(tokens)

    def __len__(self):
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __add__(self, other: AutWord) -> AutWord:
        return AutWord(self.tokens + tuple(other.tokens))

    def __eq__(self, other):
        return isinstance(other, AutWord) and self.tokens == other.tokens

    def __hash__(self):
        return hash(self.tokens)

    def __repr__(self):
        return f"AutWord({list(self.tokens)!r})"

    def inverse(self) -> AutWord:
        return AutWord(t.inverted() for t in reversed(self.tokens))

    def realize(self, ring: PolynomialRing) -> PolyMap:
        result = identity(ring)
        for token in reversed(self.tokens):
            result = compose(token.realize(ring), result)
        return result


def realize(word: AutWord, ring: PolynomialRing) -> PolyMap:
    return word.realize(ring)


# --- word text syntax: E[i;f]  D[d1,...,dn]  A[a11,...,ann;b1,...,bn]  EXP[lam;[D]] -----


def _scalar_text(c) -> str:
    text = str(c)
    return f"({text})" if " " in text else text


def format_token(token) -> str:
    if isinstance(token, Elementary):
        body = f"E[{token.index + 1};{format_polynomial(token.f)}]"
    elif isinstance(token, Diagonal):
        body = "D[" + ",".join(_scalar_text(d) for d in token.entries) + "]"
    elif isinstance(token, Affine):
        flat = [_scalar_text(a) for row in token.matrix for a in row]
        body = "A[" + ",".join(flat) + ";" + ",".join(_scalar_text(b) for b in token.translation) + "]"
    elif isinstance(token, ExpLND):
        body = f"EXP[{_scalar_text(token.lam)};{token.derivation}]"
    else:
        raise TypeError(f"unknown token {token!r}")
    return body + ("'" if token.inverse else "")


def format_word(word: AutWord) -> str:
    return " ".join(format_token(t) for t in word) or "id"


def _scalar(text: str, ring: PolynomialRing, offset: int):
    from .parsing import ParseError, parse_polynomial

    try:
        p = parse_polynomial(text, ring)
    except ParseError as exc:
        raise ParseError(str(exc).rsplit(" at position", 1)[0], offset + exc.position) from None
    if not p.is_constant():
        raise ParseError(f"{text.strip()!r} is not a scalar", offset)
    return p.coefficient((0,) * ring.n)


def parse_word(text: str, ring: PolynomialRing, derivation_presets=None) -> AutWord:
    """Parse whitespace-separated tokens; a trailing ' inverts a token; ``id`` is the empty word."""
    from .derivations import Derivation
    from .parsing import ParseError, parse_polynomial, split_top_level

    presets = derivation_presets or {}
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        start = pos
        while pos < len(text) and text[pos].isalpha():
            pos += 1
        name = text[start:pos].upper()
        if name == "ID" and (pos >= len(text) or text[pos].isspace()):
            continue
        if pos >= len(text) or text[pos] != "[" or name not in {"E", "D", "A", "EXP"}:
            raise ParseError("expected E[..], D[..], A[..] or EXP[..]", start)
        depth, end = 0, pos
        while end < len(text):
            if text[end] in "[(":
                depth += 1
            elif text[end] in "])":
                depth -= 1
                if depth == 0:
                    break
            end += 1
        if end >= len(text):
            raise ParseError("unclosed '['", pos)
        body, body_at = text[pos + 1 : end], pos + 1
        pos = end + 1
        inverse = False
        while pos < len(text) and text[pos] == "'":
            inverse = not inverse
            pos += 1
        parts = split_top_level(body, ";")
        if name == "E":
            if len(parts) != 2:
                raise ParseError("E[i;f] needs an index and a polynomial", body_at)
            try:
                index = int(parts[0][0]) - 1
            except ValueError:
                raise ParseError("variable index must be an integer", body_at) from None
            f = parse_polynomial(parts[1][0], ring)
            token = Elementary(index, f)
            elementary(index, f)  # validates index and independence
        elif name == "D":
            entries = [_scalar(p, ring, body_at + at) for p, at in split_top_level(body, ",")]
            token = Diagonal(tuple(entries))
            diagonal(ring, entries)
        elif name == "A":
            if len(parts) != 2:
                raise ParseError("A[matrix;translation] needs two parts", body_at)
            flat = [_scalar(p, ring, body_at + at) for p, at in split_top_level(parts[0][0], ",")]
            shift = [_scalar(p, ring, body_at + parts[1][1] + at) for p, at in split_top_level(parts[1][0], ",")]
            n = ring.n
            if len(flat) != n * n or len(shift) != n:
                raise ParseError(f"A[..] needs {n * n} matrix entries and {n} translation entries", body_at)
            matrix = tuple(tuple(flat[r * n : (r + 1) * n]) for r in range(n))
            token = Affine(matrix, tuple(shift))
            token.inverted().realize(ring)  # raises if singular
        else:
            if len(parts) != 2:
                raise ParseError("EXP[lambda;D] needs a scalar and a derivation", body_at)
            lam = _scalar(parts[0][0], ring, body_at)
            dtext = parts[1][0].strip()
            if dtext.lower() in presets:
                D = presets[dtext.lower()]
            else:
                D = Derivation.parse(dtext, ring)
            token = ExpLND(D, lam)
        tokens.append(token.inverted() if inverse else token)
    return AutWord(tokens)
