"""Deformed rational versions of U_n and M_n, and their difference matrices.

With d_i = sqrt(n)/k_i, every quantity here only needs the products
d_i d_j = n/(k_i k_j), so all matrices are exact rationals and sqrt(n) never
appears.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod

from .algebra import zeta_matrix
from .cardinal import t_matrix, u_matrix
from .divisors import DivisorSet
from .matrices import IntMatrix, RatMatrix, bareiss_determinant, t_inverse_left, t_sandwich
from .report import CheckReport, compare


def _scaled(S: DivisorSet, keep) -> RatMatrix:
    # n/(k_i k_j) over one common denominator, built without Fraction objects
    n, ks = S.n, S.elements
    den = 1
    for i, ki in enumerate(ks):
        for j, kj in enumerate(ks):
            if keep(i, j):
                p = ki * kj
                den = lcm(den, p // gcd(n, p))
    rows = [
        [den * n // (ki * kj) if keep(i, j) else 0 for j, kj in enumerate(ks)]
        for i, ki in enumerate(ks)
    ]
    return RatMatrix(rows, den)


def u_tilde(S: DivisorSet) -> RatMatrix:
    """n/(k_i k_j) on and above the antidiagonal, zero below."""
    s = S.s
    return _scaled(S, lambda i, j: i + j <= s - 1)


def u_tilde_plus(S: DivisorSet) -> RatMatrix:
    """Rank-one outer product with entries n/(k_i k_j) everywhere."""
    return _scaled(S, lambda i, j: True)


def u_tilde_inverse(S: DivisorSet, check: bool = False) -> RatMatrix:
    """Closed form of the inverse of u_tilde.

    Entry (i, j) is k_i k_j / n on the antidiagonal i + j = s + 1, minus that
    on the next one i + j = s + 2 (1-based), zero elsewhere.  ``check=True``
    multiplies back against u_tilde and raises if the product is not I.
    """
    n, ks, s = S.n, S.elements, S.s
    rows = []
    for i in range(s):
        r = [0] * s
        a = s - 1 - i
        r[a] = ks[i] * ks[a]
        if a + 1 < s:
            r[a + 1] = -ks[i] * ks[a + 1]
        rows.append(r)
    inv = RatMatrix(rows, n)
    if check:
        report = verify_u_tilde_inverse(S, inv)
        if not report:
            raise AssertionError(f"closed-form inverse fails for n = {n}: {report.detail}")
    return inv


def m_tilde(S: DivisorSet) -> RatMatrix:
    """T (u_tilde)^{-1} T."""
    return t_sandwich(u_tilde_inverse(S))


@dataclass
class DifferenceMatrices:
    E: RatMatrix  # u_tilde - U
    E_plus: RatMatrix  # u_tilde_plus - u_tilde
    E_tilde: RatMatrix  # u_tilde_plus - U


def difference_matrices(S: DivisorSet) -> DifferenceMatrices:
    U = u_matrix(S)
    Ut, Up = u_tilde(S), u_tilde_plus(S)
    d = DifferenceMatrices(Ut - U, Up - Ut, Up - U)
    if d.E_tilde != d.E_plus + d.E:
        raise AssertionError(f"E_tilde != E_plus + E for n = {S.n}")
    return d


def z_tilde_and_w(S: DivisorSet) -> tuple[RatMatrix, RatMatrix]:
    """Z~ = T^{-1} u_tilde and W = Z~ - Z_n."""
    Zt = t_inverse_left(u_tilde(S))
    return Zt, Zt - zeta_matrix(S)


def u_tilde_determinant(S: DivisorSet) -> Fraction:
    """det(u_tilde) by fraction-free elimination of the integer matrix K u_tilde K.

    K = diag(k_i); scaling rows and columns by k_i clears every denominator.
    """
    ks = S.elements
    Ut = u_tilde(S)
    scaled = []
    for i, ki in enumerate(ks):
        row = []
        for j, kj in enumerate(ks):
            v = Ut[i, j] * ki * kj
            if v.denominator != 1:
                raise AssertionError("K u_tilde K is not integral")
            row.append(v.numerator)
        scaled.append(row)
    return Fraction(bareiss_determinant(scaled), prod(ks) ** 2)


def verify_u_tilde_inverse(S: DivisorSet, inv: RatMatrix | None = None) -> CheckReport:
    inv = inv if inv is not None else u_tilde_inverse(S)
    return compare("u_tilde_inverse_closed_form", inv @ u_tilde(S), IntMatrix.identity(S.s))


def check_ordering(S: DivisorSet) -> CheckReport:
    """T <= U <= u_tilde <= u_tilde_plus entrywise where i + j <= s + 1,
    with 0 <= u_tilde - U < 1 there."""
    s = S.s
    T, U, Ut, Up = t_matrix(s), u_matrix(S), u_tilde(S), u_tilde_plus(S)
    # compare numerators over the common denominator D of Ut and Up
    D = lcm(Ut.den, Up.den)
    a, b = D // Ut.den, D // Up.den
    for i in range(s):
        for j in range(s - i):
            t, u = T.rows[i][j] * D, U.rows[i][j] * D
            ut, up = Ut.rows[i][j] * a, Up.rows[i][j] * b
            if not (t <= u <= ut <= up and 0 <= ut - u < D):
                return CheckReport(
                    "entrywise_ordering",
                    False,
                    (i + 1, j + 1),
                    f"T={T[i, j]} U={U[i, j]} U~={Ut[i, j]} U~+={Up[i, j]}",
                )
    return CheckReport("entrywise_ordering", True)


def check_floor_recovery(S: DivisorSet) -> CheckReport:
    U = u_matrix(S)
    r = compare("floor_u_tilde", u_tilde(S).floor(), U)
    if not r:
        return r
    r = compare("floor_u_tilde_plus", u_tilde_plus(S).floor(), U)
    r.name = "floor_recovery"
    return r


def check_w_bounds(S: DivisorSet) -> CheckReport:
    """Entries of W strictly inside (-1, 1); column sums of W equal row 1 of E."""
    _, W = z_tilde_and_w(S)
    s = S.s
    for i in range(s):
        for j in range(s):
            if not -1 < W[i, j] < 1:
                return CheckReport("w_bounds", False, (i + 1, j + 1), f"W = {W[i, j]}")
    E = difference_matrices(S).E
    for j in range(s):
        col = sum(W.rows[i][j] for i in range(s))
        if Fraction(col, W.den) != E[0, j]:
            return CheckReport("w_bounds", False, (1, j + 1), "column sum differs from first row of E")
    return CheckReport("w_bounds", True)


def is_rank_one(A: RatMatrix, samples: int = 64, seed: int = 0, full_limit: int = 64) -> bool:
    """Exact rank-one test.

    With a nonzero pivot (p, q), rank one is equivalent to the vanishing of
    every minor A[i][j] A[p][q] - A[i][q] A[p][j]; those s^2 minors are all
    checked.  Seeded random 2x2 minors are checked as well, and for
    s <= full_limit the rank is also computed by fraction-free elimination.
    """
    rows, s = A.rows, A.size
    nz = next(((i, j) for i in range(s) for j in range(s) if rows[i][j]), None)
    if nz is None:
        return False
    p, q = nz
    apq = rows[p][q]
    for i in range(s):
        for j in range(s):
            if rows[i][j] * apq != rows[i][q] * rows[p][j]:
                return False
    rng = random.Random(seed)
    for _ in range(samples):
        i, k = rng.randrange(s), rng.randrange(s)
        j, l = rng.randrange(s), rng.randrange(s)
        if rows[i][j] * rows[k][l] != rows[i][l] * rows[k][j]:
            return False
    if s <= full_limit:
        return A.rank() == 1
    return True


def sub_antidiagonal_bound_holds(x: Fraction) -> bool:
    """x <= 4 + 2*sqrt(2), decided exactly."""
    y = x - 4
    return y <= 0 or y * y <= 8
