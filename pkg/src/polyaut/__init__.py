"""Exact computer algebra for polynomial automorphisms and locally nilpotent derivations."""

from .derivations import (
    Derivation,
    NilpotencyCertificate,
    NotLocallyNilpotentError,
    apply,
    bracket,
    euler_derivation,
    exp_lnd,
    nagata_delta,
    nagata_derivation,
    nagata_map,
    verify_lnd,
)
from .fields import GF, QQ, CoefficientError, FFElement, FiniteField
from .maps import (
    Affine,
    AutWord,
    Diagonal,
    Elementary,
    ExpLND,
    PolyMap,
    compose,
    compose_all,
    diagonal,
    elementary,
    endomorphism_product,
    identity,
    pullback,
    realize,
    tame_identity_witness,
)
from .parsing import ParseError
from .polynomial import MINUS_INFINITY, Polynomial, PolynomialRing, RingMismatchError

__all__ = [
    "Affine",
    "AutWord",
    "CoefficientError",
    "Derivation",
    "Diagonal",
    "Elementary",
    "ExpLND",
    "FFElement",
    "FiniteField",
    "GF",
    "MINUS_INFINITY",
    "NilpotencyCertificate",
    "NotLocallyNilpotentError",
    "ParseError",
    "PolyMap",
    "Polynomial",
    "PolynomialRing",
    "QQ",
    "RingMismatchError",
    "apply",
    "bracket",
    "compose",
    "compose_all",
    "diagonal",
    "elementary",
    "endomorphism_product",
    "euler_derivation",
    "exp_lnd",
    "identity",
    "nagata_delta",
    "nagata_derivation",
    "nagata_map",
    "pullback",
    "realize",
    "tame_identity_witness",
    "verify_lnd",
]
