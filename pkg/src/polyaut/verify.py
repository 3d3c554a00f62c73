"""Named suites of exact identity checks, run by ``polyaut verify``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .derivations import Derivation, apply, bracket, euler_derivation, exp_lnd, nagata_derivation, nagata_map
from .fields import GF, QQ
from .ffperm import fiberwise_experiment, parity_experiment
from .fixedspace import eigenspace_basis, fixed_dimension_profile
from .gradings import solve_gradings
from .linearize import build_shift_linearization, commuting_diagonal, conjugation_scalar, family_diagonal
from .maps import compose, compose_all, identity, tame_identity_witness
from .polynomial import PolynomialRing

SUITES = ("nagata", "gradings", "fixedspace", "parity", "tame")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0


def random_rational(rng: random.Random, nonzero: bool = False, span: int = 9) -> Fraction:
    while True:
        x = Fraction(rng.randint(-span, span), rng.randint(1, span))
        if x or not nonzero:
            return x


def admissible_triple(rng: random.Random):
    """(a, b, c) with ac = b^2, abc != 0 and bc != 1."""
    while True:
        b = random_rational(rng, nonzero=True)
        c = random_rational(rng, nonzero=True)
        if b * c != 1:
            return b * b / c, b, c


def _timed(name, fn) -> Check:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(name, ok, detail, time.perf_counter() - start)


def _nagata_checks(seed: int):
    ring = PolynomialRing(QQ, 3)
    D = nagata_derivation()

    def exp_formula():
        expected = ring.parse("X - 2*Y*(X*Z + Y^2) - Z*(X*Z + Y^2)^2"), ring.parse("Y + Z*(X*Z + Y^2)"), ring.parse("Z")
        return nagata_map(1).components == expected, "exp(Δδ) = (X - 2YΔ - ZΔ², Y + ZΔ, Z)"

    def one_parameter():
        rng = random.Random(seed)
        good = 0
        for _ in range(20):
            lam, mu = random_rational(rng), random_rational(rng)
            good += compose(nagata_map(lam), nagata_map(mu)) == nagata_map(lam + mu)
        return good == 20, f"{good}/20 pairs satisfy N^λ∘N^μ = N^(λ+μ)"

    def shift():
        rng = random.Random(seed + 1)
        good = 0
        for _ in range(25):
            a, b, c = admissible_triple(rng)
            lam = random_rational(rng, nonzero=True)
            report = build_shift_linearization(family_diagonal(a, b, c), D, lam)
            good += report.verified and report.c == 1 / (b * c) and report.mu == lam / (report.c - 1)
        intro = build_shift_linearization(family_diagonal(2, 2, 2), D, 1)
        ok = good == 25 and intro.verified and intro.mu == Fraction(-4, 3)
        return ok, f"{good}/25 conjugation identities hold; s=2, λ=1 gives μ={intro.mu}"

    def scalar():
        rng = random.Random(seed + 2)
        good = 0
        for _ in range(10):
            a, b, c = admissible_triple(rng)
            good += conjugation_scalar(family_diagonal(a, b, c), D) == 1 / (b * c)
        return good == 10, f"{good}/10 triples give L⁻¹DL = (bc)⁻¹D"

    def degenerate():
        good = 0
        for b in (Fraction(2), Fraction(3), Fraction(1, 2)):
            L = commuting_diagonal(b)
            N = nagata_map(Fraction(5, 7))
            good += (
                conjugation_scalar(L, D) == 1
                and compose(L, N) == compose(N, L)
                and build_shift_linearization(L, D, 1).degenerate
            )
        return good == 3, f"{good}/3 commuting diagonals are degenerate"

    def root_of_unity():
        L = commuting_diagonal(-1)
        twice = compose(L, nagata_map(1))
        square = compose(twice, twice)
        return square == nagata_map(2) and not square.is_identity(), "(L_{-1}∘N)² = N² ≠ I"

    def bounded_degree():
        N = nagata_map(1)
        power = identity(ring)
        degrees = []
        for _ in range(10):
            power = compose(power, N)
            degrees.append(power.degree())
        return degrees == [5] * 10, f"deg(N^m), m=1..10: {degrees}"

    return [
        ("nagata exponential", exp_formula),
        ("one-parameter law", one_parameter),
        ("shifted linearization", shift),
        ("conjugation scalar", scalar),
        ("degenerate family", degenerate),
        ("root-of-unity obstruction", root_of_unity),
        ("degree boundedness", bounded_degree),
    ]


def _grading_checks(seed: int):
    D = nagata_derivation()
    ring = D.ring

    def solver():
        sol = solve_gradings(D)
        expected = [((1, 0, -1), -1), ((0, 1, 2), 3)]
        spans = sol.dimension == 2 and all(sol.contains(w, k) for w, k in expected)
        rng = random.Random(seed + 3)
        good = 0
        for _ in range(10):
            w, k = sol.combination([random_rational(rng), random_rational(rng)])
            good += bracket(euler_derivation(ring, w), D) == D * k
        return spans and good == 10, f"dimension {sol.dimension}; bracket law {good}/10"

    return [("grading solver", solver)]


def _fixedspace_checks(seed: int):
    ring = PolynomialRing(QQ, 3)
    L2N = compose(commuting_diagonal(2), nagata_map(1))

    def fixed():
        basis = eigenspace_basis(L2N, 1, 8)
        g = ring.parse("Z^2*(X*Z + Y^2)")
        claimed = [ring.one(), g, g**2]
        each_fixed = all(L2N.pullback(p) == p for p in claimed)
        spans = all(basis.contains(p) for p in claimed)
        prof_l2n = fixed_dimension_profile(L2N, 4)
        prof_l2 = fixed_dimension_profile(commuting_diagonal(2), 4)
        ok = basis.dimension == 3 and each_fixed and spans and prof_l2n != prof_l2
        return ok, f"dim E₁(L₂N, ≤8) = {basis.dimension}; profiles {prof_l2n} vs {prof_l2}"

    def rigidity():
        X, Y, Z = ring.gens()
        derivs = [nagata_derivation(), Derivation.partial(ring, 0), Derivation([Y, ring.zero(), ring.zero()], ring)]
        bad = 0
        for D in derivs:
            F = exp_lnd(D, 1)
            for mu in (2, -1, Fraction(1, 3)):
                bad += eigenspace_basis(F, mu, 6).dimension != 0
            bad += any(apply(D, p) for p in eigenspace_basis(F, 1, 6).basis)
        return bad == 0, f"{bad} violations of exp(D)p = μp ⇒ μ = 1, D(p) = 0"

    return [("fixed-space evidence", fixed), ("eigenvector rigidity", rigidity)]


def _parity_checks(seed: int):
    def experiments():
        gf4 = parity_experiment(4, 2, 200, seed)
        gf3 = parity_experiment(3, 2, 200, seed)
        fib = fiberwise_experiment(4, 50, seed)
        ok = gf4.odd_count == 0 and gf3.odd_count >= 1 and fib.odd_count == 0
        return ok, (
            f"GF(4)² {gf4.even_count} even/{gf4.odd_count} odd; GF(3)² odd witnesses {gf3.odd_count}; "
            f"fiber-wise GF(4)³ {fib.even_count} even/{fib.odd_count} odd"
        )

    return [("parity experiments", experiments)]


def _tame_checks(seed: int):
    def identity_holds():
        good = 0
        for field in (QQ, GF(9)):
            ring = PolynomialRing(field, 3)
            rng = random.Random(seed + 4)
            for _ in range(10):
                f = ring.zero()
                for _ in range(3):
                    coeff = random_rational(rng) if field == QQ else field.from_code(rng.randrange(9))
                    f = f + ring.monomial((0, rng.randint(0, 3), rng.randint(0, 3)), coeff)
                lhs, rhs = tame_identity_witness(f)
                good += lhs == rhs
        rejected = 0
        for q in (2, 4):
            try:
                tame_identity_witness(PolynomialRing(GF(q), 3).gen(1))
            except ValueError:
                rejected += 1
        return good == 20 and rejected == 2, f"E_f = L⁻¹E₋₂fLE₂f for {good}/20 f; char 2 rejected {rejected}/2"

    return [("tame identity", identity_holds)]


_BUILDERS = {
    "nagata": _nagata_checks,
    "gradings": _grading_checks,
    "fixedspace": _fixedspace_checks,
    "parity": _parity_checks,
    "tame": _tame_checks,
}


def run_suite(name: str, seed: int = 0) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES for c in run_suite(suite, seed)]
    if name not in _BUILDERS:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return [_timed(label, fn) for label, fn in _BUILDERS[name](seed)]
