import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import R3, rationals
from polyaut import (
    QQ,
    Derivation,
    MINUS_INFINITY,
    Polynomial,
    PolynomialRing,
    bracket,
    euler_derivation,
    nagata_delta,
    nagata_derivation,
)
from polyaut.gradings import (
    NotHomogeneousError,
    derivation_degree,
    is_homogeneous,
    solve_gradings,
    weighted_degree,
)


def test_weighted_degree_examples(delta):
    assert weighted_degree(delta, (1, 0, -1)) == 0
    assert weighted_degree(delta, (0, 1, 2)) == 2
    assert weighted_degree(R3.zero(), (1, 2, 3)) is MINUS_INFINITY


def test_is_homogeneous_examples(delta):
    assert is_homogeneous(delta, (1, 0, -1))
    assert not is_homogeneous(R3.parse("X + Y"), (1, 0, -1))
    assert is_homogeneous(R3.parse("7*X^3*Y*Z^2"), (Fraction(1, 3), -5, 2))


@pytest.mark.parametrize("s,t,k", [(1, 0, -1), (0, 1, 3), (3, 1, 0), (2, 5, 13)])
def test_nagata_degree_is_3t_minus_s(s, t, k):
    assert derivation_degree(nagata_derivation(), (s, t, 2 * t - s)) == k


def test_derivation_degree_errors():
    assert derivation_degree(nagata_derivation(), (1, 1, 1)) == 2
    with pytest.raises(NotHomogeneousError):
        derivation_degree(nagata_derivation(), (1, 0, 0))
    with pytest.raises(NotHomogeneousError):
        derivation_degree(Derivation([R3.zero()] * 3, R3), (1, 0, 0))
    # homogeneous images, but shifts disagree: X -> Y has shift 0, Y -> 1 has shift -1
    with pytest.raises(NotHomogeneousError):
        derivation_degree(Derivation.parse("[Y; 1; 0]", R3), (1, 1, 0))


def test_solve_gradings_nagata():
    sol = solve_gradings(nagata_derivation())
    assert sol.dimension == 2
    assert sol.basis == (((1, 0, -1), -1), ((0, 1, 2), 3))
    assert sol.contains((3, 1, -1), 0)
    assert sol.contains((1, 1, 1), 2)
    assert not sol.contains((1, 1, 1), 0)


def test_solve_gradings_one_variable():
    R1 = PolynomialRing(QQ, 1)
    assert solve_gradings(Derivation.partial(R1, 0)).basis == (((1,), -1),)
    assert solve_gradings(euler_derivation(R1, (1,))).basis == (((1,), 0),)
    with pytest.raises(ValueError):
        solve_gradings(Derivation([R1.zero()], R1))


@given(rationals, rationals)
def test_bracket_law_on_nagata_span(s, t):
    D = nagata_derivation()
    sol = solve_gradings(D)
    w, k = sol.combination((s, t))
    assert bracket(euler_derivation(R3, w), D) == D * k


def test_degree_zero_grading_commutes():
    # s = 3t gives k = 0, so the Euler derivation commutes with the Nagata derivation
    D = nagata_derivation()
    E = euler_derivation(R3, (3, 1, -1))
    assert bracket(E, D).is_zero()


def _random_monomial_derivation(rng):
    """Derivation whose images are single monomials with random coefficients."""
    images = []
    for _ in range(3):
        if rng.random() < 0.25:
            images.append(R3.zero())
            continue
        exps = tuple(rng.randint(0, 3) for _ in range(3))
        images.append(Polynomial(R3, {exps: Fraction(rng.randint(1, 5))}))
    if all(not im for im in images):
        images[0] = R3.one()
    return Derivation(images, R3)


def _random_derivation(rng):
    D = _random_monomial_derivation(rng)
    if rng.random() < 0.5:
        extra = _random_monomial_derivation(rng)
        D = D + extra
    if D.is_zero():
        D = Derivation.partial(R3, 0)
    return D


@pytest.mark.parametrize("seed", range(25))
def test_solver_soundness_and_completeness(seed):
    rng = random.Random(seed)
    D = _random_derivation(rng)
    sol = solve_gradings(D)
    # soundness: every basis element and random combination makes D homogeneous of that degree
    for w, k in sol.basis:
        if any(w) or k:
            assert _homogeneous_of_degree(D, w, k)
    coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in sol.basis]
    w, k = sol.combination(coeffs)
    assert _homogeneous_of_degree(D, w, k)
    # completeness: sampled integer (w, k) that work are in the span
    for _ in range(200):
        w = tuple(rng.randint(-2, 2) for _ in range(3))
        k = rng.randint(-4, 4)
        if _homogeneous_of_degree(D, w, k):
            assert sol.contains(w, k)


def _homogeneous_of_degree(D, w, k):
    """Brute-force check: every term of D(X_i) has weight w_i + k."""
    for i, image in enumerate(D.images):
        for m, _ in image.items():
            if sum(Fraction(a) * b for a, b in zip(w, m)) != Fraction(w[i]) + k:
                return False
    return True


@given(st.lists(rationals, min_size=2, max_size=2), st.lists(rationals, min_size=2, max_size=2))
def test_solution_space_is_linear(a, b):
    sol = solve_gradings(nagata_derivation())
    wa, ka = sol.combination(a)
    wb, kb = sol.combination(b)
    w = tuple(x + y for x, y in zip(wa, wb))
    assert sol.contains(w, ka + kb)
    assert is_homogeneous(nagata_delta(), wa)
