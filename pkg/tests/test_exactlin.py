from fractions import Fraction
from itertools import permutations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from matorder.exactlin import (DimensionError, ExactMatrix, det_cofactor, det_gauss, determinant,
                               first_dependent_row, mat_vec, rank, solve_row_combination)
from matorder.counterexamples import family_matrix
from matorder.orders import classic

from conftest import matrices, small_fraction

M = ExactMatrix.from_rows


def leibniz(a: ExactMatrix) -> Fraction:
    """Permutation-sum determinant; slow, shares no code with the library."""
    n = a.nrows
    total = Fraction(0)
    for p in permutations(range(n)):
        inv = sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))
        term = Fraction(-1 if inv % 2 else 1)
        for i in range(n):
            term *= a[i, p[i]]
        total += term
    return total


def test_mat_vec_examples():
    assert mat_vec(ExactMatrix.identity(3), (2, 3, 0)) == (2, 3, 0)
    assert mat_vec(M([[1, 1, 1]]), (2, 2, 2)) == (6,)
    assert mat_vec(classic("revlex", 3).matrix, (3, 0, 3)) == (6, -3, 0)


def test_mat_vec_dimension_mismatch():
    with pytest.raises(DimensionError):
        mat_vec(ExactMatrix.identity(3), (1, 2))


def test_matrix_shape_checks():
    with pytest.raises(DimensionError):
        M([[1, 2], [3]])
    with pytest.raises(DimensionError):
        M([])
    with pytest.raises(TypeError):
        M([[0.5]])


@pytest.mark.parametrize("n", range(1, 7))
def test_det_identity(n):
    assert determinant(ExactMatrix.identity(n)) == 1


def test_det_family_four():
    assert determinant(family_matrix("C", 4)) == -8
    # D_4: Leibniz oracle gives -4, not the closed form's -3
    assert leibniz(family_matrix("D", 4)) == -4
    assert determinant(family_matrix("D", 4)) == -4
    assert leibniz(family_matrix("C", 5)) == -11


def test_det_non_square():
    with pytest.raises(DimensionError):
        determinant(M([[1, 2]]))
    with pytest.raises(DimensionError):
        det_cofactor(M([[1, 2]]))


def test_det_needs_row_swap_and_rationals():
    a = M([[0, 1, 2], [3, 0, 1], ["1/2", 4, 0]])
    assert determinant(a) == leibniz(a) == det_cofactor(a) == det_gauss(a)


@given(matrices(1, 6))
@settings(max_examples=150, deadline=None)
def test_bareiss_matches_cofactor(a):
    assert determinant(a) == det_cofactor(a)


@given(matrices(1, 4, elements=small_fraction()))
@settings(max_examples=100, deadline=None)
def test_rational_determinants_agree(a):
    d = determinant(a)
    assert d == leibniz(a) == det_gauss(a)
    assert d.denominator > 0


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    matrices(n, n), matrices(n, n))))
@settings(max_examples=100, deadline=None)
def test_det_multiplicative(pair):
    a, b = pair
    assert determinant(a @ b) == determinant(a) * determinant(b)


def test_first_dependent_row_examples():
    assert first_dependent_row(M([[1, 0], [0, 0], [0, 1]])) == 2
    assert first_dependent_row(ExactMatrix.identity(3)) is None
    assert first_dependent_row(M([[1, 1], [2, 2], [0, 1]])) == 2
    assert first_dependent_row(M([[0, 0], [1, 0]])) == 1


def test_solve_row_combination_examples():
    assert solve_row_combination(ExactMatrix.identity(2), (3, -1)) == (3, -1)
    c = solve_row_combination(M([[1, 1, 1], [1, 1, 0], [11, 3, 2]]), (6, 2, 3))
    assert c == (2, Fraction(-3, 2), Fraction(1, 2))
    # hand check of the frozen value
    assert [2 * 1 - Fraction(3, 2) * 1 + Fraction(1, 2) * 11, 2 - Fraction(3, 2) + Fraction(3, 2),
            2 + 1] == [6, 2, 3]
    assert solve_row_combination(M([[1, 0]]), (0, 1)) is None
    assert solve_row_combination([], (0, 0)) == ()
    assert solve_row_combination([], (0, 1)) is None


@given(matrices(1, 5, square=False, elements=st.integers(-2, 2)))
@settings(max_examples=150, deadline=None)
def test_dependent_row_consistent_with_solver(a):
    r = first_dependent_row(a)
    rows = a.entries
    limit = len(rows) if r is None else r - 1
    for q in range(limit):
        assert solve_row_combination(rows[:q], rows[q]) is None
    if r is not None:
        c = solve_row_combination(rows[:r - 1], rows[r - 1])
        assert c is not None
        combo = [sum((ck * row[j] for ck, row in zip(c, rows)), Fraction(0)) for j in range(a.ncols)]
        assert combo == list(rows[r - 1])
    assert (r is None) == (rank(a) == a.nrows)


@given(matrices(1, 4, elements=small_fraction()))
@settings(max_examples=100, deadline=None)
def test_results_are_canonical(a):
    vals = [determinant(a), *mat_vec(a, [1] * a.ncols)]
    c = solve_row_combination(a, a.row(0))
    if c is not None:
        vals += list(c)
    for v in vals:
        assert isinstance(v, Fraction)
        assert v.denominator > 0
        assert gcd(v.numerator, v.denominator) == 1
