from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superradial.linalg import (
    Matrix,
    SparseEchelon,
    char_poly,
    nullspace,
    rank,
    rational_roots,
    rref,
    solve,
    solve_membership,
)

F = Fraction

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=3)
small_matrix = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda m: st.lists(
            st.lists(small_fractions, min_size=m, max_size=m), min_size=n, max_size=n
        )
    )
)


def test_rref_simple():
    red, pivots = rref([[F(2), F(4)], [F(1), F(2)]])
    assert pivots == [0]
    assert red[0] == [F(1), F(2)]
    assert red[1] == [F(0), F(0)]


def test_rank_examples():
    assert rank([]) == 0
    assert rank([[F(0), F(0)]]) == 0
    assert rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert rank([[F(1), F(0)], [F(0), F(1)], [F(1), F(1)]]) == 2


@given(small_matrix)
@settings(max_examples=60)
def test_rank_transpose_invariant(rows):
    cols = list(map(list, zip(*rows)))
    assert rank(rows) == rank(cols)


def test_nullspace_annihilates():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    for v in nullspace(rows, 3):
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) == 0
    assert rank(rows) + len(nullspace(rows, 3)) == 3


def test_solve_and_membership():
    rows = [[F(1), F(1)], [F(0), F(1)]]
    x = solve(rows, [F(3), F(1)])
    assert x == [F(2), F(1)]
    assert solve([[F(1)], [F(1)]], [F(1), F(2)]) is None

    span = [[F(1), F(0), F(1)], [F(0), F(1), F(1)]]
    assert solve_membership([F(2), F(3), F(5)], span) == [F(2), F(3)]
    assert solve_membership([F(1), F(0), F(0)], span) is None
    assert solve_membership([F(0), F(0)], []) == []
    assert solve_membership([F(1), F(0)], []) is None


def test_matrix_inverse():
    a = Matrix([[F(2), F(1)], [F(1), F(1)]])
    assert a * a.inverse() == Matrix.identity(2)
    with pytest.raises(ValueError):
        Matrix([[F(1), F(2)], [F(2), F(4)]]).inverse()


def test_matrix_apply_and_columns():
    a = Matrix.from_columns([[F(1), F(0)], [F(1), F(1)]])
    assert a.column(0) == [F(1), F(0)]
    assert a.apply([F(1), F(2)]) == [F(3), F(2)]


def test_char_poly_diagonal():
    a = Matrix([[F(2), F(0)], [F(0), F(3)]])
    # (t-2)(t-3) = 6 - 5t + t^2
    assert char_poly(a) == [F(6), F(-5), F(1)]


def test_char_poly_nilpotent():
    a = Matrix([[F(0), F(1)], [F(0), F(0)]])
    assert char_poly(a) == [F(0), F(0), F(1)]


def test_rational_roots():
    # (t-1)(t+1)(t-2)^2 = t^4 - 4t^3 + 3t^2 + 4t - 4
    roots = rational_roots([F(-4), F(4), F(3), F(-4), F(1)])
    assert roots == [(F(-1), 1), (F(1), 1), (F(2), 2)]
    # t^2 - 2 has no rational roots
    assert rational_roots([F(-2), F(0), F(1)]) == []
    # t^3: root 0 with multiplicity 3
    assert rational_roots([F(0), F(0), F(0), F(1)]) == [(F(0), 3)]
    # (2t-1)(t+3) = 2t^2 + 5t - 3
    assert rational_roots([F(-3), F(5), F(2)]) == [(F(-3), 1), (F(1, 2), 1)]


def _dense_to_sparse(rows):
    return [{j: v for j, v in enumerate(row) if v} for row in rows]


@given(small_matrix)
@settings(max_examples=60)
def test_sparse_echelon_matches_dense_rank(rows):
    ech = SparseEchelon()
    for sparse_row in _dense_to_sparse(rows):
        ech.insert(sparse_row)
    assert ech.rank == rank(rows)


def test_sparse_echelon_membership():
    ech = SparseEchelon()
    assert ech.insert({"a": F(1), "b": F(2)})
    assert ech.insert({"b": F(1)})
    assert not ech.insert({"a": F(2), "b": F(1)})
    assert ech.contains({"a": F(5), "b": F(-3)})
    assert not ech.contains({"c": F(1)})
    # reduce stops at the first lead without a pivot; trailing labels stay put
    lead, residual = ech.reduce({"a": F(1), "c": F(4)})
    assert lead == "c" and residual == {"a": F(1), "c": F(4)}
