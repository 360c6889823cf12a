"""The matrices T, U_n, U_n^{-1} and the Mertens matrix M_n = T U_n^{-1} T."""

from __future__ import annotations

import numpy as np

from .divisors import DivisorSet
from .matrices import IntMatrix, fraction_free_inverse, t_sandwich
from .mertens import MertensTable


class UnimodularityError(AssertionError):
    """U_n came out with a determinant other than +-1; this is a bug."""


def t_matrix(s: int) -> IntMatrix:
    if s < 1:
        raise ValueError("s must be positive")
    return IntMatrix([[int(i + j <= s - 1) for j in range(s)] for i in range(s)])


def t_inverse(s: int) -> IntMatrix:
    if s < 1:
        raise ValueError("s must be positive")
    rows = []
    for i in range(s):
        r = [0] * s
        r[s - 1 - i] = 1
        if i:
            r[s - i] = -1
        rows.append(r)
    return IntMatrix(rows)


def u_matrix(S: DivisorSet) -> IntMatrix:
    n, ks = S.n, S.elements
    return IntMatrix([[n // (ki * kj) for kj in ks] for ki in ks])


def u_inverse(S: DivisorSet, general: bool = False) -> IntMatrix:
    """Exact inverse of U_n, pivoting along the unit antidiagonal.

    ``general=True`` runs the generic fraction-free Gauss-Jordan routine with
    the same pivot order instead of the structured forward substitution.
    """
    U = u_matrix(S)
    if general:
        s = S.s
        det, adj = fraction_free_inverse(U.rows, [s - 1 - c for c in range(s)])
        if det not in (1, -1):
            raise UnimodularityError(f"det U_{S.n} = {det}")
        adj = IntMatrix(adj)
        return adj if det == 1 else -adj
    return skew_unimodular_inverse(U)


def skew_unimodular_inverse(A: IntMatrix) -> IntMatrix:
    """Inverse of a matrix that is zero below a unit antidiagonal.

    Reversing the rows gives a lower unitriangular L with A = J L, so
    A^{-1} = L^{-1} J.  Row i of L^{-1} is supported on columns 0..i and is
    obtained as e_i - sum_k L[i][k] * row k; all pivots are 1, so there is no
    division at all.
    """
    s = A.size
    if not (A.is_skew_upper_triangular() and all(x == 1 for x in A.antidiagonal())):
        raise UnimodularityError("matrix is not skew-triangular with unit antidiagonal")
    L = A.rows[::-1]
    X: list[list[int]] = []
    for i in range(s):
        acc = [0] * (i + 1)
        acc[i] = 1
        Li = L[i]
        for k in range(i):
            f = Li[k]
            if f:
                Xk = X[k]
                acc[: k + 1] = [a - f * x for a, x in zip(acc, Xk)]
        X.append(acc)
    return IntMatrix([[X[i][s - 1 - j] if s - 1 - j <= i else 0 for j in range(s)] for i in range(s)])


def u_determinant(S: DivisorSet) -> int:
    """det U_n by Bareiss elimination (independent of the inversion path)."""
    return u_matrix(S).determinant()



def m_matrix(S: DivisorSet) -> IntMatrix:
    return t_sandwich(u_inverse(S))


def mertens_entries(S: DivisorSet, M: MertensTable) -> np.ndarray:
    """int64 array of M(floor(n / (k_i k_j))), vectorised."""
    if M.limit < S.n:
        raise ValueError(f"Mertens table covers {M.limit} < n = {S.n}")
    k = np.array(S.elements, dtype=np.int64)
    return M.M[S.n // np.multiply.outer(k, k)]


def m_matrix_via_mertens(S: DivisorSet, M: MertensTable) -> IntMatrix:
    return IntMatrix(mertens_entries(S, M).tolist())


def check_floor_commutation(n: int, i: int, j: int) -> bool:
    """floor(floor(n/j)/i) == floor(floor(n/i)/j) == floor(n/(i j))."""
    if min(n, i, j) < 1:
        raise ValueError("n, i, j must be positive")
    return (n // j) // i == (n // i) // j == n // (i * j)
