"""Derivations of k[X1..Xn], local-nilpotency certificates and exact exponentials."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .fields import QQ
from .maps import PolyMap
from .parsing import parse_derivation_images
from .polynomial import Polynomial, PolynomialRing, RingMismatchError, format_polynomial

DEFAULT_BOUND = 64


class NotLocallyNilpotentError(ValueError):
    """Some variable survived ``bound`` applications of the derivation.

    This means nilpotency was not verified within the bound, not that the
    derivation is provably non-nilpotent.
    """

    def __init__(self, variable: str, survivor: Polynomial, bound: int):
        super().__init__(
            f"not locally nilpotent within bound {bound}: D^{bound}({variable}) = {survivor} is nonzero"
        )
        self.variable = variable
        self.survivor = survivor
        self.bound = bound


class Derivation:
    """A derivation, stored as the images of the variables."""

    __slots__ = ("ring", "images")

    def __init__(self, images, ring: PolynomialRing | None = None):
        images = tuple(images)
        if ring is None:
            ring = images[0].ring
        images = tuple(ring(g) for g in images)
        if len(images) != ring.n:
            raise ValueError(f"{ring} needs {ring.n} images, got {len(images)}")
        self.ring = ring
        self.images = images

    @classmethod
    def parse(cls, text: str, ring: PolynomialRing) -> Derivation:
        return cls(parse_derivation_images(text, ring), ring)

    @classmethod
    def partial(cls, ring: PolynomialRing, i: int) -> Derivation:
        return cls([ring.one() if j == i else ring.zero() for j in range(ring.n)], ring)

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply(self, p)

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.ring == other.ring and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def _check(self, other: Derivation):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other: Derivation) -> Derivation:
        self._check(other)
        return Derivation([a + b for a, b in zip(self.images, other.images)], self.ring)

    def __neg__(self):
        return Derivation([-a for a in self.images], self.ring)

    def __sub__(self, other: Derivation) -> Derivation:
        return self + (-other)

    def __mul__(self, c):
        """Scalar multiple, or (with a polynomial) the derivation p*D."""
        return Derivation([g * c for g in self.images], self.ring)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.images)

    def __str__(self):
        return "[" + "; ".join(format_polynomial(g) for g in self.images) + "]"

    def __repr__(self):
        return f"Derivation{self}"


def apply(D: Derivation, p: Polynomial) -> Polynomial:
    """D(p) = sum_i dp/dX_i * D(X_i)."""
    if D.ring != p.ring:
        raise RingMismatchError(f"{D.ring} vs {p.ring}")
    result = p.ring.zero()
    for i, image in enumerate(D.images):
        if image and p.involves(i):
            result = result + p.derivative(i) * image
    return result


def bracket(D: Derivation, E: Derivation) -> Derivation:
    """[D, E] = DE - ED."""
    D._check(E)
    return Derivation(
        [apply(D, E.images[i]) - apply(E, D.images[i]) for i in range(D.ring.n)],
        D.ring,
    )


@dataclass(frozen=True)
class NilpotencyCertificate:
    derivation: Derivation
    indices: tuple[int, ...]
    bound: int

    def replay(self) -> bool:
        """Re-derive that D^{m_i}(X_i) == 0 for every i."""
        D = self.derivation
        for g, m in zip(D.ring.gens(), self.indices):
            p = g
            for _ in range(m):
                p = apply(D, p)
            if p:
                return False
        return True


def _orbit(D: Derivation, p: Polynomial, bound: int, name: str) -> list[Polynomial]:
    """[p, D(p), ..., D^{m-1}(p)] with D^m(p) == 0."""
    seq = []
    for _ in range(bound):
        seq.append(p)
        p = apply(D, p)
        if not p:
            return seq
    raise NotLocallyNilpotentError(name, p, bound)


def verify_lnd(D: Derivation, bound: int = DEFAULT_BOUND) -> NilpotencyCertificate:
    """Check that every variable is annihilated by some D^m, m <= bound.

    Elements on which D is nilpotent form a subalgebra, so the generators
    suffice.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    indices = tuple(
        len(_orbit(D, g, bound, name)) for g, name in zip(D.ring.gens(), D.ring.names)
    )
    return NilpotencyCertificate(D, indices, bound)


def exp_lnd(D: Derivation, lam=1, bound: int = DEFAULT_BOUND) -> PolyMap:
    """exp(lam*D) as a map: component i is sum_j lam^j / j! D^j(X_i)."""
    ring = D.ring
    field = ring.field
    lam = field.coerce(lam)
    orbits = [_orbit(D, g, bound, name) for g, name in zip(ring.gens(), ring.names)]
    longest = max(len(o) for o in orbits)
    weights = []
    for j in range(longest):
        fact = field.coerce(factorial(j))
        if not fact:
            raise ValueError(
                f"{j}! vanishes in characteristic {field.characteristic}; exp needs it inverted"
            )
        weights.append(lam**j / fact)
    comps = []
    for orbit in orbits:
        comp = ring.zero()
        for j, term in enumerate(orbit):
            comp = comp + term * weights[j]
        comps.append(comp)
    return PolyMap(comps, ring)


def _nagata_ring(field) -> PolynomialRing:
    if field.characteristic == 2:
        raise ValueError("the Nagata derivation and map need characteristic != 2")
    return PolynomialRing(field, 3)


def nagata_delta(field=QQ) -> Polynomial:
    """XZ + Y^2."""
    ring = PolynomialRing(field, 3)
    X, Y, Z = ring.gens()
    return X * Z + Y**2


def nagata_derivation(field=QQ) -> Derivation:
    """(XZ + Y^2) * (-2Y d/dX + Z d/dY)."""
    ring = _nagata_ring(field)
    X, Y, Z = ring.gens()
    delta = X * Z + Y**2
    return Derivation([-2 * Y * delta, Z * delta, ring.zero()], ring)


def nagata_map(lam=1, field=QQ) -> PolyMap:
    """exp(lam * Nagata derivation) = (X - 2 lam Y Δ - lam^2 Z Δ^2, Y + lam Z Δ, Z)."""
    return exp_lnd(nagata_derivation(field), lam)


def euler_derivation(ring: PolynomialRing, weights) -> Derivation:
    """sum_i w_i X_i d/dX_i."""
    return Derivation([g * ring.field.coerce(w) for g, w in zip(ring.gens(), weights)], ring)
