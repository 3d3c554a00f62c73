from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from polyaut.fields import GF, QQ, CoefficientError, FiniteField, parse_field


def test_rationals_are_lowest_terms():
    x = QQ.coerce(Fraction(6, -4))
    assert (x.numerator, x.denominator) == (-3, 2)
    assert QQ.coerce("10/4") == Fraction(5, 2)


def test_rational_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        QQ.one() / QQ.zero()


@pytest.mark.parametrize("q,p,m", [(2, 2, 1), (3, 3, 1), (4, 2, 2), (8, 2, 3), (9, 3, 2)])
def test_builtin_fields(q, p, m):
    F = GF(q)
    assert (F.characteristic, F.degree, F.order) == (p, m, q)
    assert len(set(F.elements())) == q


def test_fixed_moduli():
    assert GF(4).modulus == (1, 1, 1)
    assert GF(8).modulus == (1, 1, 0, 1)
    assert GF(9).modulus == (1, 0, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FiniteField(2, (1, 0, 1))  # t^2 + 1 = (t + 1)^2 over GF(2)
    with pytest.raises(ValueError):
        FiniteField(3, (2, 0, 1))  # t^2 + 2 = (t + 1)(t + 2) over GF(3)
    with pytest.raises(ValueError):
        FiniteField(4, (0, 1))


def test_unsupported_q():
    with pytest.raises(ValueError):
        GF(6)


@pytest.mark.parametrize("q", [4, 8, 9])
def test_field_axioms_exhaustively(q):
    F = GF(q)
    els = F.elements()
    zero, one = F.zero(), F.one()
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * a.inverse() == one
    for a, b in product(els, repeat=2):
        assert a * b == b * a and a + b == b + a
    # multiplicative group is cyclic of order q - 1: every nonzero element satisfies a^(q-1) = 1
    assert all(a ** (q - 1) == one for a in els if a)


@pytest.mark.parametrize("q", [4, 9])
def test_distributivity_and_associativity(q):
    els = GF(q).elements()
    for a, b, c in product(els, repeat=3):
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


def test_generator_relations():
    t = GF(4).generator()
    assert t * t + t + 1 == 0
    t9 = GF(9).generator()
    assert t9 * t9 == -1


def test_coercion_of_fractions_into_prime_field():
    F = GF(3)
    assert F.coerce(Fraction(1, 2)) == 2
    with pytest.raises(CoefficientError):
        F.coerce(Fraction(1, 3))
    with pytest.raises(CoefficientError):
        QQ.generator()
    with pytest.raises(CoefficientError):
        GF(5).generator()


def test_ff_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GF(9).one() / GF(9).zero()


def test_codes_roundtrip():
    F = GF(9)
    assert [F.from_code(c).code for c in range(9)] == list(range(9))


@given(st.integers(0, 8), st.integers(0, 8))
def test_gf9_subtraction_inverts_addition(a, b):
    F = GF(9)
    x, y = F.from_code(a), F.from_code(b)
    assert (x + y) - y == x


def test_parse_field_names():
    assert parse_field("Q") == QQ
    assert parse_field("GF(9)") == GF(9)
    assert parse_field("gf4") == GF(4)
    assert parse_field("3") == GF(3)
    with pytest.raises(ValueError):
        parse_field("R")
