from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cardinal_matrices.matrices import (
    IntMatrix,
    RatMatrix,
    SingularMatrixError,
    bareiss_determinant,
    bareiss_rank,
    fraction_free_inverse,
    t_inverse_left,
    t_left,
    t_right,
    t_sandwich,
)
from cardinal_matrices.cardinal import t_inverse, t_matrix


def square(max_size=6, lo=-9, hi=9):
    return st.integers(1, max_size).flatmap(
        lambda s: st.lists(st.lists(st.integers(lo, hi), min_size=s, max_size=s), min_size=s, max_size=s)
    )


@settings(max_examples=200)
@given(square())
def test_bareiss_against_sympy(rows):
    assert bareiss_determinant([r[:] for r in rows]) == sympy.Matrix(rows).det()
    assert bareiss_rank([r[:] for r in rows]) == sympy.Matrix(rows).rank()


@settings(max_examples=150)
@given(square(5))
def test_fraction_free_inverse_is_adjugate(rows):
    det, adj = fraction_free_inverse([r[:] for r in rows])
    m = sympy.Matrix(rows)
    assert det == m.det()
    if det != 0:
        assert sympy.Matrix(adj) == m.adjugate()


def test_int_inverse_and_singular():
    A = IntMatrix([[2, 1], [1, 1]])
    assert A.inverse() == IntMatrix([[1, -1], [-1, 2]])
    with pytest.raises(SingularMatrixError):
        IntMatrix([[1, 2], [2, 4]]).inverse()
    with pytest.raises(ArithmeticError):
        IntMatrix([[2, 0], [0, 1]]).inverse()


def test_indexing_conventions():
    A = IntMatrix([[1, 2], [3, 4]])
    assert A.entry(1, 2) == 2 and A[0, 1] == 2
    assert A.support() == {(1, 1), (1, 2), (2, 1), (2, 2)}
    assert A.first_difference(IntMatrix([[1, 2], [3, 5]])) == (2, 2)
    assert A.first_difference(A) is None


@given(square(5, -20, 20), st.integers(1, 30))
def test_ratmatrix_canonical_equality(rows, d):
    R = RatMatrix(rows, d)
    F = RatMatrix.from_fractions([[Fraction(x, d) for x in r] for r in rows])
    assert R == F
    assert R.entry(1, 1) == Fraction(rows[0][0], d)
    assert (R - F).frobenius_sq() == 0


@settings(max_examples=100)
@given(square(4, -5, 5))
def test_ratmatrix_inverse(rows):
    R = RatMatrix(rows, 3)
    if sympy.Matrix(rows).det() == 0:
        with pytest.raises(SingularMatrixError):
            R.inverse()
    else:
        assert R @ R.inverse() == RatMatrix.from_int(IntMatrix.identity(len(rows)))


@given(square(7))
def test_structured_t_products(rows):
    A = IntMatrix(rows)
    s = A.size
    T, Ti = t_matrix(s), t_inverse(s)
    assert t_left(A) == T @ A
    assert t_right(A) == A @ T
    assert t_sandwich(A) == T @ A @ T
    assert t_inverse_left(A) == Ti @ A
    R = RatMatrix(rows, 6)
    assert t_sandwich(R) == RatMatrix.from_int(T) @ R @ RatMatrix.from_int(T)


def test_shape_predicates():
    T = t_matrix(3)
    assert T.is_symmetric() and not T.is_lower_triangular()
    assert T.antidiagonal() == [1, 1, 1]
    assert IntMatrix([[0, 0], [1, 0]]).is_strictly_lower_triangular()
    assert IntMatrix([[1, 1], [1, 0]]).is_skew_upper_triangular()
    assert not IntMatrix([[1, 1], [1, 1]]).is_skew_upper_triangular()
