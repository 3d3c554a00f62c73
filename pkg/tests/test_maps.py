import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import R3, polynomials, rationals
from polyaut import (
    GF,
    QQ,
    Affine,
    AutWord,
    Diagonal,
    Elementary,
    ExpLND,
    PolyMap,
    PolynomialRing,
    compose,
    diagonal,
    elementary,
    identity,
    nagata_derivation,
    nagata_map,
    pullback,
    tame_identity_witness,
)
from polyaut.maps import endomorphism_product, format_word, parse_word

small_maps = st.lists(polynomials(max_terms=2, max_exp=2), min_size=3, max_size=3).map(lambda cs: PolyMap(cs, R3))


def test_map_literal_and_printing():
    F = PolyMap.parse("(X + Y^3, Y, Z)", R3)
    assert str(F) == "(Y^3 + X, Y, Z)"
    assert PolyMap.parse(str(F), R3) == F


def test_compose_convention_on_points():
    F = PolyMap.parse("(X + Y^2, Y, Z)", R3)
    G = PolyMap.parse("(X, Y + 1, Z)", R3)
    pt = (Fraction(1), Fraction(2), Fraction(3))
    assert compose(F, G)(pt) == F(G(pt))
    assert compose(F, G) != compose(G, F)


def test_one_parameter_group_examples():
    assert compose(nagata_map(Fraction(1, 2)), nagata_map(Fraction(1, 3))) == nagata_map(Fraction(5, 6))
    F = nagata_map(1)
    assert compose(F, identity(R3)) == F == compose(identity(R3), F)


def test_twice_nagata_is_componentwise_double():
    N = nagata_map(1)
    twoN = compose(diagonal(R3, [2, 2, 2]), N)
    assert twoN.components == tuple(2 * c for c in N.components)


def test_pullback_examples(delta):
    N = nagata_map(1)
    assert pullback(N, delta) == delta
    X, Y, Z = R3.gens()
    L2 = diagonal(R3, [8, 2, Fraction(1, 2)])
    assert pullback(L2, Z**2 * delta) == Z**2 * delta
    assert pullback(identity(R3), delta) == delta


def test_diagonal_examples():
    X, Y, Z = R3.gens()
    assert diagonal(R3, [2, 2, 2]).components == (2 * X, 2 * Y, 2 * Z)
    assert diagonal(R3, [8, 2, Fraction(1, 2)]) == PolyMap.parse("(8*X, 2*Y, 1/2*Z)", R3)
    assert diagonal(R3, [1, 1, 1]).is_identity()
    with pytest.raises(ValueError):
        diagonal(R3, [1, 0, 1])


def test_elementary_examples():
    R2 = PolynomialRing(QQ, 2)
    X, Y = R2.gens()
    assert elementary(0, Y**3) == PolyMap([X + Y**3, Y])
    assert elementary(0, R2.zero()).is_identity()
    assert elementary(1, X**2) == PolyMap([X, Y + X**2])
    with pytest.raises(ValueError):
        elementary(0, X * Y)


def test_realize_examples():
    D = nagata_derivation()
    word = AutWord([Diagonal((2, 2, 2)), ExpLND(D, 1)])
    assert word.realize(R3) == compose(diagonal(R3, [2, 2, 2]), nagata_map(1))
    assert AutWord().realize(R3).is_identity()
    f = R3.parse("Y^2 + Z")
    token = Elementary(0, f)
    assert AutWord([token, token.inverted()]).realize(R3).is_identity()


def test_endomorphism_product_reverses_point_composition(delta):
    F = nagata_map(1)
    G = diagonal(R3, [2, 3, 5])
    p = R3.parse("X*Y + Z^2")
    # pullback(product(F, G)) = pullback(F) after pullback(G)
    assert pullback(endomorphism_product(F, G), p) == pullback(F, pullback(G, p))
    assert endomorphism_product(F, G) == compose(G, F)


def test_affine_inverse_token():
    token = Affine(((1, 2, 0), (0, 1, 0), (3, 0, 1)), (1, -1, 2))
    assert AutWord([token, token.inverted()]).realize(R3).is_identity()


def test_tame_identity_examples():
    lhs, rhs = tame_identity_witness(R3.parse("Y^2"))
    assert lhs == rhs == PolyMap.parse("(X + Y^2, Y, Z)", R3)
    lhs, rhs = tame_identity_witness(R3.zero())
    assert lhs == rhs and lhs.is_identity()
    R9 = PolynomialRing(GF(9), 3)
    lhs, rhs = tame_identity_witness(R9.parse("3*Y + Z^3"))
    assert lhs == rhs
    lhs, rhs = tame_identity_witness(R9.parse("t*Y^2*Z + (t + 2)"))
    assert lhs == rhs
    with pytest.raises(ValueError):
        tame_identity_witness(PolynomialRing(GF(4), 3).parse("Y"))
    with pytest.raises(ValueError):
        tame_identity_witness(R3.parse("X*Y"))


@given(small_maps, small_maps, small_maps)
def test_compose_is_associative(F, G, H):
    assert compose(compose(F, G), H) == compose(F, compose(G, H))


@given(small_maps, small_maps, polynomials(max_terms=3, max_exp=2))
def test_pullback_is_contravariant(F, G, p):
    assert pullback(compose(F, G), p) == pullback(G, pullback(F, p))


def _random_token(rng: random.Random):
    kind = rng.randrange(4)
    X, Y, Z = R3.gens()
    if kind == 0:
        i = rng.randrange(3)
        others = [g for j, g in enumerate((X, Y, Z)) if j != i]
        f = others[0] ** rng.randint(0, 2) * Fraction(rng.randint(-3, 3), rng.randint(1, 3)) + others[1]
        return Elementary(i, f)
    if kind == 1:
        return Diagonal(tuple(Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3)) for _ in range(3)))
    if kind == 2:
        while True:
            m = tuple(tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(3))
            token = Affine(m, tuple(rng.randint(-2, 2) for _ in range(3)))
            try:
                token.inverted().realize(R3)
                return token
            except ValueError:
                continue
    return ExpLND(nagata_derivation(), Fraction(rng.randint(-3, 3), rng.randint(1, 3)))


@pytest.mark.parametrize("seed", range(8))
def test_word_times_inverse_is_identity(seed):
    rng = random.Random(seed)
    word = AutWord(_random_token(rng) for _ in range(rng.randint(1, 6)))
    assert (word + word.inverse()).realize(R3).is_identity()
    assert (word.inverse() + word).realize(R3).is_identity()


@pytest.mark.parametrize("lam", [Fraction(1), Fraction(-2, 3), Fraction(7, 5), Fraction(3)])
def test_nagata_degree_sequence_is_bounded(lam):
    F = nagata_map(lam)
    assert F.degree() == 5
    power = identity(R3)
    for _ in range(10):
        power = compose(power, F)
        assert power.degree() == 5


def test_word_text_roundtrip():
    D = nagata_derivation()
    word = AutWord(
        [
            Elementary(0, R3.parse("Y^2 - 1/2*Z")),
            Diagonal((2, 3, Fraction(1, 5))).inverted(),
            Affine(((1, 1, 0), (0, 1, 0), (0, 0, 1)), (0, 1, 0)),
            ExpLND(D, Fraction(4, 3)),
        ]
    )
    text = format_word(word)
    assert text.startswith("E[1;Y^2 - 1/2*Z] D[2,3,1/5]' A[")
    parsed = parse_word(text, R3)
    assert parsed.realize(R3) == word.realize(R3)
    assert parse_word("EXP[1;nagata]", R3, {"nagata": D}).realize(R3) == nagata_map(1)
    assert parse_word("id", R3).realize(R3).is_identity()


def test_word_parse_errors():
    from polyaut import ParseError

    with pytest.raises(ValueError):
        parse_word("E[1;X]", R3)  # f involves X
    with pytest.raises(ParseError):
        parse_word("Q[1]", R3)
    with pytest.raises(ValueError):
        parse_word("D[1,0,1]", R3)
