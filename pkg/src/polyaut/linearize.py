"""Shifted linearization of exponentials by diagonal linear maps.

A diagonal map L acts on derivations by conjugation as operators on the
polynomial ring: (L^-1 D L)(p) = L^-1(D(L(p))), where L(p) is the pullback.
When L^-1 D L = c D for a scalar c, the same conjugation sends exp(lam D) to
exp(c lam D), and for c != 1 the product L exp(lam D) is conjugate to L:

    exp(-mu D) (L exp(lam D)) exp(mu D) = L,    mu = lam / (c - 1),

all products taken as ring endomorphisms.  In terms of maps of points the
same statement reads exp(mu D) o exp(lam D) o L o exp(-mu D) = L, and the map
L o exp(lam D) is conjugated to L by exp(nu D) with nu = c lam / (1 - c).
"""

from __future__ import annotations

from dataclasses import dataclass

from .derivations import DEFAULT_BOUND, Derivation, exp_lnd, nagata_derivation
from .fields import QQ
from .maps import PolyMap, compose_all, diagonal, endomorphism_product


class NotDiagonalError(ValueError):
    pass


class NotProportionalError(ValueError):
    """L^-1 D L is not a scalar multiple of D."""

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class DegenerateShiftError(ValueError):
    """The conjugation scalar is 1, so L commutes with exp(lam D)."""


class IdentityViolation(RuntimeError):
    """An identity that must always hold failed; indicates an implementation bug."""


def _entries(L: PolyMap):
    entries = L.diagonal_entries()
    if entries is None:
        raise NotDiagonalError(f"{L} is not a diagonal linear map")
    return entries


def conjugate_derivation(L: PolyMap, D: Derivation) -> Derivation:
    """L^-1 D L: X_i -> d_i * D(X_i)(X_1/d_1, ..., X_n/d_n)."""
    entries = _entries(L)
    ring = D.ring
    one = ring.field.one()
    inverse_images = [g * (one / d) for g, d in zip(ring.gens(), entries)]
    return Derivation(
        [image.substitute(inverse_images) * d for image, d in zip(D.images, entries)],
        ring,
    )


def conjugation_scalar(L: PolyMap, D: Derivation):
    """The scalar c with L^-1 D L == c D."""
    if D.is_zero():
        raise ValueError("the zero derivation is proportional to everything")
    conj = conjugate_derivation(L, D)
    c = None
    for i, image in enumerate(D.images):
        if image:
            mono, coeff = next(iter(image.items()))
            c = conj.images[i].coefficient(mono) / coeff
            break
    for i, (a, b) in enumerate(zip(conj.images, D.images)):
        if a != b * c:
            raise NotProportionalError(
                i, f"component {D.ring.names[i]}: {a} is not {c} * ({b}); L^-1 D L is not a multiple of D"
            )
    return c


def conjugate_exp(L: PolyMap, D: Derivation, lam, bound: int = DEFAULT_BOUND):
    """Return c*lam and check L^-1 exp(lam D) L == exp(c lam D) exactly."""
    c = conjugation_scalar(L, D)
    field = D.ring.field
    lam = field.coerce(lam)
    one = field.one()
    L_inv = diagonal(D.ring, [one / d for d in _entries(L)])
    lhs = endomorphism_product(L_inv, exp_lnd(D, lam, bound), L)
    rhs = exp_lnd(D, c * lam, bound)
    if lhs != rhs:
        raise IdentityViolation(f"L^-1 exp({lam} D) L != exp({c * lam} D)")
    return c * lam


def shift_conjugator(lam, c):
    """mu = lam / (c - 1)."""
    if c == 1:
        raise DegenerateShiftError("conjugation scalar is 1: L commutes with exp(lam D)")
    return lam / (c - 1)


@dataclass(frozen=True)
class ShiftReport:
    L: PolyMap
    derivation: Derivation
    lam: object
    c: object
    mu: object  # conjugator exponent for the endomorphism product L exp(lam D)
    nu: object  # conjugator exponent for the point map L o exp(lam D)
    verified: bool
    degenerate: bool

    def as_dict(self) -> dict:
        def s(x):
            return None if x is None else str(x)

        return {
            "map": str(self.L),
            "derivation": str(self.derivation),
            "lambda": s(self.lam),
            "c": s(self.c),
            "mu": s(self.mu),
            "nu": s(self.nu),
            "verified": self.verified,
            "degenerate": self.degenerate,
        }


def build_shift_linearization(L: PolyMap, D: Derivation, lam, bound: int = DEFAULT_BOUND) -> ShiftReport:
    """Compute c and the conjugators, and verify both conjugation identities exactly."""
    field = D.ring.field
    lam = field.coerce(lam)
    c = conjugation_scalar(L, D)
    if c == 1:
        return ShiftReport(L, D, lam, c, None, None, verified=False, degenerate=True)
    mu = shift_conjugator(lam, c)
    nu = c * lam / (1 - c)

    def E(t):
        return exp_lnd(D, t, bound)

    operator_form = endomorphism_product(E(-mu), endomorphism_product(L, E(lam)), E(mu))
    point_form = compose_all(E(-nu), L, E(lam), E(nu))
    verified = operator_form == L and point_form == L
    return ShiftReport(L, D, lam, c, mu, nu, verified=verified, degenerate=False)


@dataclass(frozen=True)
class NagataFamilyDescriptor:
    a: object
    b: object
    c: object
    in_L: bool
    in_L0: bool


def nagata_family(a, b, c, field=QQ) -> NagataFamilyDescriptor:
    """Membership of (aX, bY, cZ) in {ac = b^2, abc != 0} and in its subset with bc = 1."""
    a, b, c = (field.coerce(x) for x in (a, b, c))
    in_L = a * c == b * b and bool(a * b * c)
    return NagataFamilyDescriptor(a, b, c, in_L, in_L and b * c == 1)


def family_diagonal(a, b, c, field=QQ) -> PolyMap:
    """(aX, bY, cZ)."""
    return diagonal(nagata_derivation(field).ring, [a, b, c])


def commuting_diagonal(b, field=QQ) -> PolyMap:
    """(b^3 X, b Y, Z / b): the diagonal maps commuting with the Nagata map."""
    b = field.coerce(b)
    return family_diagonal(b**3, b, field.one() / b, field)
