from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from polyaut import GF
from polyaut import linalg

small = st.integers(-3, 3).map(Fraction)


def _apply(columns, x):
    out = {}
    for j, c in x.items():
        for r, v in columns[j].items():
            out[r] = out.get(r, 0) + c * v
    return {r: v for r, v in out.items() if v}


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=5))
def test_kernel_vectors_are_annihilated_and_rank_nullity_holds(rows):
    ncols = 4
    columns = [{r: row[j] for r, row in enumerate(rows) if row[j]} for j in range(ncols)]
    ker = linalg.kernel(columns, Fraction(1))
    for x in ker:
        assert _apply(columns, x) == {}
    rank = linalg.rank([linalg.dense_to_sparse(r) for r in rows], Fraction(1))
    assert len(ker) + rank == ncols
    assert linalg.rank(ker, Fraction(1)) == len(ker)


def test_kernel_against_enumeration_over_gf3():
    F = GF(3)
    rows = [[1, 2, 0, 1], [0, 1, 1, 1]]
    columns = [{r: F.coerce(rows[r][j]) for r in range(2) if rows[r][j]} for j in range(4)]
    ker = linalg.kernel(columns, F.one())
    # oracle: brute force all 81 vectors
    solutions = [
        x for x in product(range(3), repeat=4) if all(sum(r[j] * x[j] for j in range(4)) % 3 == 0 for r in rows)
    ]
    assert len(solutions) == 3 ** len(ker)


def test_rref_is_normalized():
    rows = [linalg.dense_to_sparse([Fraction(2), 4, 6]), linalg.dense_to_sparse([Fraction(1), 1, 1])]
    reduced = linalg.rref(rows)
    dense = [linalg.sparse_to_dense(r, 3, 0) for r in reduced]
    assert dense == [[1, 0, -1], [0, 1, 2]]


def test_solve_in_span():
    vecs = [{0: Fraction(1), 1: Fraction(1)}, {1: Fraction(1)}]
    assert linalg.solve_in_span(vecs, {0: Fraction(2), 1: Fraction(5)}) == [2, 3]
    assert linalg.solve_in_span(vecs, {2: Fraction(1)}) is None
    assert linalg.in_span(vecs, {0: Fraction(3)})


def test_inverse_matrix():
    A = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    inv = linalg.inverse_matrix(A, Fraction(1))
    assert inv == [[1, -1], [-1, 2]]
    with pytest.raises(ValueError):
        linalg.inverse_matrix([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], Fraction(1))
