from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from parabolic_lab import linalg
from parabolic_lab.scalars import GaussianRational, I

from conftest import small_rationals


def matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_rationals, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def sparse(m):
    # make rank deficiency likely
    return [[x if (i + j) % 3 else Fraction(0) for j, x in enumerate(row)] for i, row in enumerate(m)]


@given(matrices())
def test_rank_matches_sympy(m):
    for mat in (m, sparse(m), m + m):
        assert linalg.rank(mat) == sympy.Matrix(mat).rank()


@given(matrices())
def test_nullspace(m):
    n = len(m[0])
    ns = linalg.nullspace(m, n)
    assert len(ns) == n - linalg.rank(m)
    for v in ns:
        assert all(sum((a * b for a, b in zip(row, v)), Fraction(0)) == 0 for row in m)


@given(matrices(5, 5), st.lists(small_rationals, min_size=5, max_size=5))
def test_solve(m, x):
    n = len(m[0])
    x = x[:n] + [Fraction(0)] * (n - len(x[:n]))
    rhs = [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in m]
    y = linalg.solve(m, rhs)
    assert y is not None
    assert [sum((a * b for a, b in zip(row, y)), Fraction(0)) for row in m] == rhs


def test_solve_inconsistent():
    assert linalg.solve([[1, 1], [1, 1]], [Fraction(1), Fraction(2)]) is None


def test_inverse_over_gaussians():
    m = [[GaussianRational(1), I], [GaussianRational(2), GaussianRational(3, 1)]]
    inv = linalg.inverse(m)
    prod = linalg.matmul(m, inv)
    assert prod == [[1, 0], [0, 1]]


def test_intersect():
    a = [[1, 0, 0], [0, 1, 0]]
    b = [[0, 1, 0], [0, 0, 1]]
    got = linalg.intersect([[Fraction(x) for x in v] for v in a], [[Fraction(x) for x in v] for v in b], 3)
    assert got == [[0, 1, 0]]
