import pytest
import sympy
from hypothesis import given, strategies as st

from cardinal_matrices.algebra import mobius_matrix, zeta_matrix
from cardinal_matrices.cardinal import (
    check_floor_commutation,
    m_matrix,
    m_matrix_via_mertens,
    t_inverse,
    t_matrix,
    u_determinant,
    u_inverse,
    u_matrix,
)
from cardinal_matrices.divisors import build_divisor_set
from cardinal_matrices.matrices import IntMatrix
from cardinal_matrices.mertens import mertens


def test_t_examples():
    assert t_matrix(1) == IntMatrix([[1]])
    assert t_inverse(2) == IntMatrix([[0, 1], [1, -1]])
    for s in range(1, 12):
        assert t_matrix(s) @ t_inverse(s) == IntMatrix.identity(s)
        # inverse lives on the antidiagonal and the one just below it
        assert all(i + j in (s - 1, s) for i, j in [(a - 1, b - 1) for a, b in t_inverse(s).support()])


@pytest.mark.parametrize("n", [1, 12, 16, 45])
def test_u_entries(n):
    S = build_divisor_set(n)
    U = u_matrix(S)
    assert U == IntMatrix([[n // (a * b) for b in S.elements] for a in S.elements])
    assert U == t_matrix(S.s) @ zeta_matrix(S)
    assert U.is_symmetric() and U.is_skew_upper_triangular()


def test_u_small_cases():
    assert u_matrix(build_divisor_set(16)).rows[0] == [16, 8, 5, 4, 3, 2, 1]
    assert u_matrix(build_divisor_set(1)) == IntMatrix([[1]])
    assert u_inverse(build_divisor_set(1)) == IntMatrix([[1]])
    Ui = u_inverse(build_divisor_set(16))
    assert Ui.entry(7, 7) == 2 and Ui.entry(7, 2) == -2


@pytest.mark.parametrize("n", [2, 16, 30, 77, 150])
def test_u_inverse_against_sympy(n):
    S = build_divisor_set(n)
    U = u_matrix(S)
    Ui = u_inverse(S)
    assert U @ Ui == IntMatrix.identity(S.s)
    assert sympy.Matrix(Ui.rows) == sympy.Matrix(U.rows).inv()
    assert u_inverse(S, general=True) == Ui
    assert u_determinant(S) == sympy.Matrix(U.rows).det()


@given(st.integers(1, 600))
def test_unimodular(n):
    S = build_divisor_set(n)
    d = u_determinant(S)
    s = S.s
    assert d == (-1) ** (s * (s - 1) // 2)


def test_m_examples():
    S = build_divisor_set(16)
    M = m_matrix(S)
    assert M.rows[0] == [-1, -2, -2, -1, -1, 0, 1]
    assert m_matrix(build_divisor_set(1)) == IntMatrix([[1]])
    S100 = build_divisor_set(100)
    assert m_matrix(S100) == m_matrix_via_mertens(S100, mertens(100))


@given(st.integers(1, 700))
def test_mertens_identity(n):
    S = build_divisor_set(n)
    M = m_matrix(S)
    assert M == m_matrix_via_mertens(S, mertens(n))
    assert M == t_matrix(S.s) @ mobius_matrix(S)


def test_m_via_mertens_structure():
    n = 300
    S = build_divisor_set(n)
    Mx = m_matrix_via_mertens(S, mertens(n))
    s = S.s
    assert Mx.entry(1, 1) == mertens(n)(n)
    assert all(Mx.entry(i, s + 1 - i) == 1 for i in range(1, s + 1))
    assert all(Mx.entry(i, j) == 0 for i in range(1, s + 1) for j in range(1, s + 1) if i + j > s + 1)
    with pytest.raises(ValueError):
        m_matrix_via_mertens(S, mertens(n - 1))


def test_floor_commutation():
    assert check_floor_commutation(16, 2, 3)
    assert (16 // 3) // 2 == 2 == 16 // 6
    assert all(check_floor_commutation(n, 1, j) for n in range(1, 50) for j in range(1, 50))


@given(st.integers(1, 10**12), st.integers(1, 10**6), st.integers(1, 10**6))
def test_floor_commutation_large(n, i, j):
    assert check_floor_commutation(n, i, j)
