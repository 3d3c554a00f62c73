"""Polynomial maps over GF(q) as permutations of GF(q)^n, and parity experiments.

Sampling of random tame words (SplitMix64 stream, see :mod:`polyaut.rng`):

* token kind: ``below(2)``; 0 = elementary, 1 = affine.
* elementary: target variable ``below(n)``; then for every monomial in the
  other variables of total degree <= max_degree, in graded lex order
  (lowest degree first), one ``coin()`` decides inclusion and an included
  monomial gets coefficient ``from_code(1 + below(q - 1))``.
* affine: n*n matrix entries ``from_code(below(q))`` row by row, redrawn
  whole until invertible; then n translation entries the same way.

Fiber-wise words (n = 3, Z fixed) draw kind ``below(3)``: elementary in X
over monomials in (Y, Z), elementary in Y over monomials in (X, Z), or an
affine map of (X, Y) with constant entries and Z untouched.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from itertools import product

from .fields import GF, FiniteField
from .fixedspace import monomials_up_to
from .linalg import is_invertible
from .maps import Affine, AutWord, Elementary, PolyMap, format_word
from .polynomial import Polynomial, PolynomialRing
from .rng import SplitMix64

log = logging.getLogger(__name__)

MAX_POINTS = 2**16


class NonBijectiveError(ValueError):
    def __init__(self, first, second, image):
        super().__init__(f"points {first} and {second} both map to {image}")
        self.pair = (first, second)


class GuardExceeded(ValueError):
    pass


def _field(q) -> FiniteField:
    if isinstance(q, FiniteField):
        return q
    return GF(int(q))


class PointTable:
    """All points of GF(q)^n, lexicographic in the field's element order."""

    def __init__(self, field, n: int):
        field = _field(field)
        if field.order**n > MAX_POINTS:
            raise GuardExceeded(f"{field.order}^{n} points exceeds the guard of {MAX_POINTS}")
        self.field = field
        self.n = n
        self.elements = field.elements()
        self.points = list(product(self.elements, repeat=n))
        self.codes = {tuple(x.code for x in pt): i for i, pt in enumerate(self.points)}

    def __len__(self):
        return len(self.points)

    def index(self, point) -> int:
        return self.codes[tuple(x.code for x in point)]


class Permutation:
    """A bijection of {0, ..., size-1}; ``perm[i]`` is the image of i."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("image array is not a bijection")
        self.images = images

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(range(size))

    @classmethod
    def transposition(cls, size: int, i: int, j: int) -> Permutation:
        images = list(range(size))
        images[i], images[j] = j, i
        return cls(images)

    def __len__(self):
        return len(self.images)

    def __getitem__(self, i):
        return self.images[i]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def compose(self, other: Permutation) -> Permutation:
        """self after other."""
        return Permutation(self.images[i] for i in other.images)

    __mul__ = compose

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = []
            i = start
            while not seen[i]:
                seen[i] = True
                cycle.append(i)
                i = self.images[i]
            out.append(tuple(cycle))
        return out

    def sign(self) -> int:
        return -1 if (len(self.images) - len(self.cycles())) % 2 else 1

    @property
    def parity(self) -> str:
        return "even" if self.sign() == 1 else "odd"


def sign(perm: Permutation) -> int:
    return perm.sign()


def map_to_permutation(F: PolyMap, table: PointTable) -> Permutation:
    if F.ring.field != table.field or F.ring.n != table.n:
        raise ValueError(f"map over {F.ring} does not act on the {table.field}^{table.n} table")
    images = []
    hit: dict[int, int] = {}
    for i, pt in enumerate(table.points):
        j = table.index(F(pt))
        if j in hit:
            raise NonBijectiveError(table.points[hit[j]], pt, table.points[j])
        hit[j] = i
        images.append(j)
    return Permutation(images)


def word_to_permutation(word: AutWord, table: PointTable) -> Permutation:
    """Permutation of the realized word, as the product of its token permutations."""
    ring = PolynomialRing(table.field, table.n)
    result = Permutation.identity(len(table))
    for token in word:
        result = result * map_to_permutation(token.realize(ring), table)
    return result


def _random_poly(rng: SplitMix64, ring: PolynomialRing, monomials) -> Polynomial:
    field = ring.field
    terms = {}
    for m in monomials:
        if rng.coin():
            terms[m] = field.from_code(1 + rng.below(field.order - 1))
    return Polynomial(ring, terms)


def _random_invertible(rng: SplitMix64, field: FiniteField, n: int):
    while True:
        matrix = [[field.from_code(rng.below(field.order)) for _ in range(n)] for _ in range(n)]
        if is_invertible(matrix, field.one()):
            return matrix


def _sample_tame_word(rng: SplitMix64, ring: PolynomialRing, length: int, max_degree: int) -> AutWord:
    field, n = ring.field, ring.n
    all_monos = monomials_up_to(n, max_degree)
    tokens = []
    for _ in range(length):
        if rng.below(2) == 0:
            i = rng.below(n)
            f = _random_poly(rng, ring, [m for m in all_monos if m[i] == 0])
            tokens.append(Elementary(i, f))
        else:
            matrix = _random_invertible(rng, field, n)
            shift = [field.from_code(rng.below(field.order)) for _ in range(n)]
            tokens.append(Affine(tuple(map(tuple, matrix)), tuple(shift)))
    return AutWord(tokens)


def random_tame_word(seed: int, n: int, q, length: int, max_degree: int) -> AutWord:
    """Deterministic pseudo-random word of elementary and affine tokens over GF(q)."""
    if length < 0:
        raise ValueError("length must be non-negative")
    return _sample_tame_word(SplitMix64(seed), PolynomialRing(_field(q), n), length, max_degree)


def _sample_fiberwise_word(rng: SplitMix64, ring: PolynomialRing, length: int, max_degree: int) -> AutWord:
    field = ring.field
    monos = monomials_up_to(3, max_degree)
    tokens = []
    for _ in range(length):
        kind = rng.below(3)
        if kind < 2:
            f = _random_poly(rng, ring, [m for m in monos if m[kind] == 0])
            tokens.append(Elementary(kind, f))
        else:
            block = _random_invertible(rng, field, 2)
            zero, one = field.zero(), field.one()
            matrix = ((block[0][0], block[0][1], zero), (block[1][0], block[1][1], zero), (zero, zero, one))
            shift = (field.from_code(rng.below(field.order)), field.from_code(rng.below(field.order)), zero)
            tokens.append(Affine(matrix, shift))
    return AutWord(tokens)


@dataclass
class ParityReport:
    q: int
    n: int
    samples: int
    even_count: int = 0
    odd_count: int = 0
    witnesses: list = dc_field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "samples": self.samples,
            "evenCount": self.even_count,
            "oddCount": self.odd_count,
            "witnesses": self.witnesses,
        }


MAX_WITNESSES = 5


def _run(sampler, field: FiniteField, n: int, samples: int, seed: int, length: int, max_degree: int) -> ParityReport:
    table = PointTable(field, n)
    ring = PolynomialRing(field, n)
    rng = SplitMix64(seed)
    report = ParityReport(field.order, n, samples)
    for s in range(samples):
        word = sampler(rng, ring, length, max_degree)
        perm = word_to_permutation(word, table)
        if perm.sign() == 1:
            report.even_count += 1
        else:
            report.odd_count += 1
            if len(report.witnesses) < MAX_WITNESSES:
                report.witnesses.append({"sample": s, "parity": "odd", "word": format_word(word)})
            if field.characteristic == 2 and field.degree >= 2:
                log.warning("ODD tame bijection over GF(%d): sample %d, word %s", field.order, s, format_word(word))
    return report


def parity_experiment(q, n: int, samples: int, seed: int = 0, length: int = 6, max_degree: int = 3) -> ParityReport:
    """Tally parities of random tame words over GF(q)^n."""
    return _run(_sample_tame_word, _field(q), n, samples, seed, length, max_degree)


def fiberwise_experiment(q, samples: int, seed: int = 0, length: int = 6, max_degree: int = 2) -> ParityReport:
    """Parities of random Z-fixing words over GF(2^m)^3, m >= 2."""
    field = _field(q)
    if field.characteristic != 2 or field.degree < 2:
        raise ValueError("fiber-wise experiment needs q = 2^m with m >= 2")
    return _run(_sample_fiberwise_word, field, 3, samples, seed, length, max_degree)
