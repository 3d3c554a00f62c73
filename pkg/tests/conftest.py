import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from polyaut import GF, QQ, Polynomial, PolynomialRing

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

R3 = PolynomialRing(QQ, 3)


@pytest.fixture
def ring():
    return R3


@pytest.fixture
def xyz():
    return R3.gens()


@pytest.fixture
def delta():
    X, Y, Z = R3.gens()
    return X * Z + Y**2


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def field_elements(field):
    if field == QQ:
        return rationals
    return st.integers(0, field.order - 1).map(field.from_code)


@st.composite
def polynomials(draw, ring=R3, max_terms=4, max_exp=3):
    terms = draw(
        st.dictionaries(
            st.tuples(*[st.integers(0, max_exp)] * ring.n),
            field_elements(ring.field),
            max_size=max_terms,
        )
    )
    return Polynomial(ring, terms)


def poly_strategy(field=QQ, n=3, **kw):
    return polynomials(PolynomialRing(field, n), **kw)


FIELDS = [QQ, GF(3), GF(4), GF(9)]


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
