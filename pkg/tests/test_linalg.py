"""Row reduction, subspace arithmetic, and the subspace enumerator."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lieform import (
    Field,
    Matrix,
    Subspace,
    enumerate_subspaces,
    gaussian_binomial,
    null_space,
    rref,
    solve,
)

Q = Field.rationals()
F2 = Field.gf(2)
F3 = Field.gf(3)


def q_matrix(draw_rows):
    return [[Fraction(x) for x in row] for row in draw_rows]


small_q_rows = st.lists(
    st.lists(st.integers(min_value=-4, max_value=4), min_size=3, max_size=3),
    min_size=1,
    max_size=4,
)

f3_rows = st.lists(
    st.lists(st.integers(min_value=0, max_value=2), min_size=4, max_size=4),
    min_size=1,
    max_size=4,
)


@given(small_q_rows)
def test_rref_idempotent_q(rows):
    reduced, pivots = rref(q_matrix(rows), Q)
    again, pivots2 = rref(reduced, Q)
    assert again == reduced
    assert pivots == pivots2


@given(f3_rows)
def test_rref_preserves_row_space(rows):
    reduced, pivots = rref(rows, F3)
    space = Subspace.span(F3, 4, reduced)
    for row in rows:
        assert space.contains(row)
    assert space.dim == len(pivots)


@given(f3_rows)
def test_rank_nullity(rows):
    m = Matrix(F3, rows, ncols=4)
    assert m.rank() + len(m.kernel()) == 4


@given(small_q_rows, st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3))
def test_solve_consistent(rows, x0):
    a = Matrix(Q, q_matrix(rows), ncols=3)
    x = [Fraction(v) for v in x0]
    b = [sum(row[j] * x[j] for j in range(3)) for row in a.rows]
    got = solve(a.rows, b, Q)
    assert got is not None
    back = [sum(row[j] * got[j] for j in range(3)) for row in a.rows]
    assert back == b


def test_solve_inconsistent():
    rows = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(0)]]
    assert solve(rows, [Fraction(1), Fraction(2)], Q) is None


def test_null_space_oracle():
    # x + y + z = 0 over GF(2) has the 4 vectors {000, 110, 101, 011}
    basis = null_space([[1, 1, 1]], F2, ncols=3)
    assert len(basis) == 2
    span = Subspace.span(F2, 3, basis)
    solutions = [v for v in [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)] if (v[0] + v[1] + v[2]) % 2 == 0]
    assert all(span.contains(v) for v in solutions)


def test_matrix_product_and_action():
    a = Matrix(F3, [[1, 2], [0, 1]])
    b = Matrix(F3, [[1, 1], [1, 0]])
    assert (a * b).rows == ((0, 1), (1, 0))
    # row vector acts on the right
    assert a.act((1, 1)) == (1, 0)


def test_matrix_trace_transpose():
    a = Matrix(Q, q_matrix([[1, 2], [3, 4]]))
    assert a.trace() == Fraction(5)
    assert a.transpose().rows == ((1, 3), (2, 4))


@given(f3_rows, f3_rows)
def test_subspace_dimension_formula(rows_a, rows_b):
    u = Subspace.span(F3, 4, rows_a)
    w = Subspace.span(F3, 4, rows_b)
    assert (u + w).dim + (u & w).dim == u.dim + w.dim


@given(f3_rows)
def test_subspace_coordinates(rows):
    s = Subspace.span(F3, 4, rows)
    for v in s.basis:
        coords = s.coordinates(v)
        assert coords is not None
        rebuilt = [0, 0, 0, 0]
        for c, b in zip(coords, s.basis):
            for j in range(4):
                rebuilt[j] = (rebuilt[j] + c * b[j]) % 3
        assert tuple(rebuilt) == tuple(v)


def test_subspace_order_and_eq():
    u = Subspace.span(F2, 3, [(1, 0, 0)])
    w = Subspace.span(F2, 3, [(1, 0, 0), (0, 1, 0)])
    assert u < w and u <= w and u != w
    # same span, different generators, equal canonical form
    assert Subspace.span(F2, 3, [(1, 1, 0), (0, 1, 0)]) == w


def test_enumerate_subspaces_counts():
    # 1 + 7 + 7 + 1 subspaces of F_2^3
    all_spaces = list(enumerate_subspaces(F2, 3))
    assert len(all_spaces) == 16
    assert len({s for s in all_spaces}) == 16
    for k in range(4):
        count = sum(1 for s in all_spaces if s.dim == k)
        assert count == gaussian_binomial(3, k, 2)


def test_enumerate_subspaces_gf3():
    # 1 + 4 + 1 subspaces of F_3^2
    assert sum(1 for _ in enumerate_subspaces(F3, 2)) == 6
    assert gaussian_binomial(2, 1, 3) == 4


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 1, 2) == 7
    assert gaussian_binomial(5, 0, 3) == 1
    assert gaussian_binomial(2, 3, 2) == 0


def test_enumerate_subspaces_fixed_dim():
    lines = list(enumerate_subspaces(F3, 3, dim=1))
    assert len(lines) == gaussian_binomial(3, 1, 3) == 13
    assert all(s.dim == 1 for s in lines)


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=2**31 - 1))
def test_rank_nullity_random_seeded(seed):
    rng = random.Random(seed)
    n, m = rng.randint(1, 5), rng.randint(1, 5)
    for field in (F2, F3, Q):
        if field.p is None:
            rows = [[Fraction(rng.randint(-9, 9)) for _ in range(m)] for _ in range(n)]
        else:
            rows = [[rng.randrange(field.p) for _ in range(m)] for _ in range(n)]
        mat = Matrix(field, rows, ncols=m)
        assert mat.rank() + len(mat.kernel()) == m
        assert mat.rank() + len(mat.left_kernel()) == n
