"""Bounded-degree eigenspaces {p : p(F) = mu p, deg p <= d} by exact linear algebra."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from . import linalg
from .maps import AutWord, PolyMap, compose_all, pullback
from .polynomial import Polynomial, PolynomialRing


class DegreeBoundError(ValueError):
    def __init__(self, required: int, given: int):
        super().__init__(f"degree bound {given} too small; transported elements need {required}")
        self.required = required
        self.given = given


def monomials_up_to(n: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree <= d: by degree, then lex with X1 > X2 > ..."""
    out = []
    for deg in range(d + 1):
        block = []
        for combo in combinations_with_replacement(range(n), deg):
            exps = [0] * n
            for i in combo:
                exps[i] += 1
            block.append(tuple(exps))
        out.extend(sorted(block, reverse=True))
    return out


class CoefficientSpace:
    """Coordinates of polynomials of degree <= d in the monomial basis."""

    def __init__(self, ring: PolynomialRing, d: int):
        if d < 0:
            raise ValueError("degree bound must be non-negative")
        self.ring = ring
        self.d = d
        self.basis = monomials_up_to(ring.n, d)
        self.index = {m: i for i, m in enumerate(self.basis)}

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def expected_dimension(self) -> int:
        return comb(self.ring.n + self.d, self.d)

    def to_vector(self, p: Polynomial) -> dict:
        vec = {}
        for m, c in p.items():
            if m not in self.index:
                raise ValueError(f"{p} has degree above {self.d}")
            vec[self.index[m]] = c
        return vec

    def from_vector(self, vec: dict) -> Polynomial:
        return Polynomial(self.ring, {self.basis[i]: c for i, c in vec.items()})


def monomial_images(F: PolyMap, monomials) -> dict:
    """pullback(F, m) for every monomial m; builds each from a smaller one times a component."""
    ring = F.ring
    images = {(0,) * ring.n: ring.one()}
    for m in sorted(monomials, key=sum):
        if m in images:
            continue
        i = next(j for j, e in enumerate(m) if e)
        smaller = m[:i] + (m[i] - 1,) + m[i + 1 :]
        if smaller not in images:
            images[smaller] = pullback(F, ring.monomial(smaller))
        images[m] = images[smaller] * F.components[i]
    return images


@dataclass(frozen=True)
class EigenspaceBasis:
    F: PolyMap
    mu: object
    d: int
    basis: tuple[Polynomial, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, p: Polynomial) -> bool:
        """Whether p lies in the span of the basis."""
        space = CoefficientSpace(self.F.ring, max([self.d, p.total_degree()] if p else [self.d]))
        one = self.F.ring.field.one()
        return linalg.in_span([space.to_vector(b) for b in self.basis], space.to_vector(p), one)


def eigenspace_basis(F: PolyMap, mu, d: int) -> EigenspaceBasis:
    """Kernel of p -> pullback(F, p) - mu p on polynomials of degree <= d.

    The basis is the reduced row echelon form of the kernel in the graded
    monomial order, so each element's lowest monomial has coefficient 1.
    """
    ring = F.ring
    field = ring.field
    mu = field.coerce(mu)
    space = CoefficientSpace(ring, d)
    images = monomial_images(F, space.basis)
    row_index: dict = {}
    columns = []
    for m in space.basis:
        col = {}
        diff = images[m] - ring.monomial(m, mu)
        for tm, c in diff.items():
            col[row_index.setdefault(tm, len(row_index))] = c
        columns.append(col)
    null = linalg.kernel(columns, field.one())
    reduced = linalg.rref(null, field.one())
    return EigenspaceBasis(F, mu, d, tuple(space.from_vector(v) for v in reduced))


def fixed_dimension_profile(F: PolyMap, dmax: int) -> tuple[int, ...]:
    if dmax < 0:
        raise ValueError("dmax must be non-negative")
    return tuple(eigenspace_basis(F, 1, d).dimension for d in range(dmax + 1))


@dataclass(frozen=True)
class Transport:
    source: EigenspaceBasis  # eigenspace of F
    target: EigenspaceBasis  # eigenspace of sigma^-1 o F o sigma
    transported: tuple[Polynomial, ...]  # pullback(sigma, p) for p in source

    def consistent(self) -> bool:
        return all(self.target.contains(p) for p in self.transported)


def conjugation_transport(sigma: AutWord, F: PolyMap, mu, d: int, target_degree: int | None = None) -> Transport:
    """Eigenspaces of F and of sigma^-1 o F o sigma, plus the source basis pulled back by sigma.

    If p(F) = mu p then q = p(sigma) satisfies q(sigma^-1 o F o sigma) = mu q,
    so the transported elements must lie in the target eigenspace.
    """
    ring = F.ring
    s = sigma.realize(ring)
    s_inv = sigma.inverse().realize(ring)
    conj = compose_all(s_inv, F, s)
    source = eigenspace_basis(F, mu, d)
    transported = tuple(pullback(s, p) for p in source.basis)
    required = max((p.total_degree() for p in transported), default=0)
    if target_degree is None:
        target_degree = max(required, d)
    elif required > target_degree:
        raise DegreeBoundError(required, target_degree)
    target = eigenspace_basis(conj, mu, target_degree)
    return Transport(source, target, transported)
