"""Dense exact matrices over Z and Q.

``IntMatrix`` holds Python ints.  ``RatMatrix`` holds an integer numerator
matrix over one positive common denominator, kept in canonical form (the
denominator is as small as possible), so equality is plain comparison.
Entries of a ``RatMatrix`` are exposed as ``Fraction`` in lowest terms.

Row/column indices in Python calls are 0-based; locations reported in
``first_difference`` and error messages are 1-based.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import accumulate
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np


class SingularMatrixError(ArithmeticError):
    pass


class _Base:
    __slots__ = ("rows",)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def is_square(self) -> bool:
        return all(len(r) == len(self.rows) for r in self.rows)

    def _num_symmetric(self) -> bool:
        rows = self.rows
        s = len(rows)
        return all(rows[i][j] == rows[j][i] for i in range(s) for j in range(i))

    def is_symmetric(self) -> bool:
        return self._num_symmetric()

    def is_lower_triangular(self) -> bool:
        return all(not any(r[i + 1 :]) for i, r in enumerate(self.rows))

    def is_strictly_lower_triangular(self) -> bool:
        return all(not any(r[i:]) for i, r in enumerate(self.rows))

    def is_skew_upper_triangular(self) -> bool:
        """Zero at every entry strictly below the antidiagonal."""
        s = len(self.rows)
        return all(not any(r[s - i :]) for i, r in enumerate(self.rows))

    def antidiagonal(self) -> list:
        s = len(self.rows)
        return [self.entry(i, s + 1 - i) for i in range(1, s + 1)]

    def support(self) -> set[tuple[int, int]]:
        """1-based positions of nonzero entries."""
        return {
            (i + 1, j + 1)
            for i, r in enumerate(self.rows)
            for j, v in enumerate(r)
            if v
        }

    def to_float(self) -> np.ndarray:
        raise NotImplementedError

    def entry(self, i: int, j: int):
        raise NotImplementedError

    def tolist(self) -> list[list]:
        s = len(self.rows)
        return [[self.entry(i, j) for j in range(1, s + 1)] for i in range(1, s + 1)]

    def first_difference(self, other) -> tuple[int, int] | None:
        """1-based location of the first differing entry (row-major), or None."""
        a, b = self.tolist(), other.tolist()
        if len(a) != len(b):
            return (0, 0)
        for i, (ra, rb) in enumerate(zip(a, b), 1):
            for j, (x, y) in enumerate(zip(ra, rb), 1):
                if x != y:
                    return (i, j)
        return None


class IntMatrix(_Base):
    """Square matrix of arbitrary-precision integers."""

    __slots__ = ()

    def __init__(self, rows: Iterable[Iterable[int]]):
        self.rows = [[int(v) for v in r] for r in rows]
        if not self.is_square():
            raise ValueError("matrix must be square")

    @classmethod
    def _wrap(cls, rows: list[list[int]]) -> "IntMatrix":
        m = cls.__new__(cls)
        m.rows = rows
        return m

    @classmethod
    def identity(cls, s: int) -> "IntMatrix":
        return cls._wrap([[int(i == j) for j in range(s)] for i in range(s)])

    @classmethod
    def zeros(cls, s: int) -> "IntMatrix":
        return cls._wrap([[0] * s for _ in range(s)])

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, RatMatrix):
            return other == self
        return isinstance(other, IntMatrix) and self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"IntMatrix({self.rows!r})"

    def __add__(self, other):
        if isinstance(other, RatMatrix):
            return other + self
        return IntMatrix._wrap([[x + y for x, y in zip(r, q)] for r, q in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if isinstance(other, RatMatrix):
            return RatMatrix.from_int(self) - other
        return IntMatrix._wrap([[x - y for x, y in zip(r, q)] for r, q in zip(self.rows, other.rows)])

    def __neg__(self):
        return IntMatrix._wrap([[-x for x in r] for r in self.rows])

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix._wrap([[c * x for x in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            return RatMatrix.from_int(self) @ other
        return IntMatrix._wrap(_matmul(self.rows, other.rows))

    def transpose(self) -> "IntMatrix":
        return IntMatrix._wrap([list(c) for c in zip(*self.rows)])

    def power(self, e: int) -> "IntMatrix":
        result = IntMatrix.identity(self.size)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def frobenius_sq(self) -> int:
        return sum(x * x for r in self.rows for x in r)

    def max_abs(self) -> int:
        return max((abs(x) for r in self.rows for x in r), default=0)

    def determinant(self) -> int:
        return bareiss_determinant(self.rows)

    def rank(self) -> int:
        return bareiss_rank(self.rows)

    def inverse(self, pivot_rows: Sequence[int] | None = None) -> "IntMatrix":
        """Exact inverse of a unimodular matrix.

        Raises ``SingularMatrixError`` if the determinant is not +-1.
        """
        det, adj = fraction_free_inverse(self.rows, pivot_rows)
        if det not in (1, -1):
            raise SingularMatrixError(f"determinant {det} is not a unit; no integer inverse")
        if det == -1:
            adj = [[-x for x in r] for r in adj]
        return IntMatrix._wrap(adj)

    def to_float(self) -> np.ndarray:
        return np.array(self.rows, dtype=float).reshape(self.size, self.size)


class RatMatrix(_Base):
    """Square matrix of rationals, numerators over a common denominator."""

    __slots__ = ("den",)

    def __init__(self, numerators: Iterable[Iterable[int]], den: int = 1):
        rows = [[int(v) for v in r] for r in numerators]
        den = int(den)
        if den == 0:
            raise ZeroDivisionError("denominator is zero")
        self.rows, self.den = _canonical(rows, den)
        if not self.is_square():
            raise ValueError("matrix must be square")

    @classmethod
    def _make(cls, rows, den) -> "RatMatrix":
        m = cls.__new__(cls)
        m.rows, m.den = _canonical(rows, den)
        return m

    @classmethod
    def from_fractions(cls, entries: Sequence[Sequence]) -> "RatMatrix":
        fr = [[Fraction(x) for x in r] for r in entries]
        den = reduce(lcm, (x.denominator for r in fr for x in r), 1)
        return cls._make([[x.numerator * (den // x.denominator) for x in r] for r in fr], den)

    @classmethod
    def from_int(cls, m: IntMatrix) -> "RatMatrix":
        return cls._make([list(r) for r in m.rows], 1)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.rows[i - 1][j - 1], self.den)

    def __getitem__(self, ij):
        i, j = ij
        return Fraction(self.rows[i][j], self.den)

    def _coerce(self, other) -> "RatMatrix":
        return RatMatrix.from_int(other) if isinstance(other, IntMatrix) else other

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.den == 1 and self.rows == other.rows
        return isinstance(other, RatMatrix) and self.den == other.den and self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"RatMatrix({self.rows!r}, den={self.den})"

    def _combine(self, other, sign):
        other = self._coerce(other)
        den = lcm(self.den, other.den)
        a, b = den // self.den, den // other.den
        return RatMatrix._make(
            [[a * x + sign * b * y for x, y in zip(r, q)] for r, q in zip(self.rows, other.rows)],
            den,
        )

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return self._coerce(other)._combine(self, -1)

    def __neg__(self):
        return RatMatrix._make([[-x for x in r] for r in self.rows], self.den)

    def __matmul__(self, other):
        other = self._coerce(other)
        return RatMatrix._make(_matmul(self.rows, other.rows), self.den * other.den)

    def __rmatmul__(self, other):
        return self._coerce(other) @ self

    def transpose(self) -> "RatMatrix":
        return RatMatrix._make([list(c) for c in zip(*self.rows)], self.den)

    def is_integral(self) -> bool:
        return self.den == 1

    def floor(self) -> IntMatrix:
        d = self.den
        return IntMatrix._wrap([[x // d for x in r] for r in self.rows])

    def frobenius_sq(self) -> Fraction:
        return Fraction(sum(x * x for r in self.rows for x in r), self.den * self.den)

    def max_abs(self) -> Fraction:
        return Fraction(max((abs(x) for r in self.rows for x in r), default=0), self.den)

    def determinant(self) -> Fraction:
        return Fraction(bareiss_determinant(self.rows), self.den ** len(self.rows))

    def rank(self) -> int:
        return bareiss_rank(self.rows)

    def inverse(self) -> "RatMatrix":
        det, adj = fraction_free_inverse(self.rows)
        if det == 0:
            raise SingularMatrixError("matrix is singular")
        # (N/d)^-1 = d * adj(N) / det(N)
        if det < 0:
            det, adj = -det, [[-x for x in r] for r in adj]
        return RatMatrix._make([[self.den * x for x in r] for r in adj], det)

    def to_float(self) -> np.ndarray:
        s = self.size
        if max((abs(x) for r in self.rows for x in r), default=0).bit_length() < 53 and self.den.bit_length() < 53:
            return np.array(self.rows, dtype=float).reshape(s, s) / self.den
        return np.array([[float(Fraction(x, self.den)) for x in r] for r in self.rows]).reshape(s, s)


def _canonical(rows, den):
    if den < 0:
        rows = [[-x for x in r] for r in rows]
        den = -den
    g = den
    for r in rows:
        for x in r:
            if x:
                g = gcd(g, x)
                if g == 1:
                    return rows, den
    if g > 1:
        rows = [[x // g for x in r] for r in rows]
        den //= g
    return rows, den


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    # accumulate scaled rows of b; skips zero entries of a, which dominate here
    s = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * s
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                if x == 1:
                    acc = [p + q for p, q in zip(acc, bk)]
                else:
                    acc = [p + x * q for p, q in zip(acc, bk)]
        out.append(acc)
    return out


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination with row pivoting."""
    m = [list(r) for r in rows]
    s = len(m)
    if s == 0:
        return 1
    if not all(any(r) for r in m) or not all(any(c) for c in zip(*m)):
        return 0
    sign, prev = 1, 1
    for k in range(s - 1):
        # smallest nonzero pivot keeps the intermediate minors small
        cands = [p for p in range(k, s) if m[p][k]]
        if not cands:
            return 0
        p = min(cands, key=lambda r: abs(m[r][k]))
        if p != k:
            m[k], m[p] = m[p], m[k]
            sign = -sign
        pivot, pk = m[k][k], m[k]
        for i in range(k + 1, s):
            mi = m[i]
            f = mi[k]
            if f == 0 and pivot == prev:
                continue
            m[i] = mi[: k + 1] + [(pivot * x - f * y) // prev for x, y in zip(mi[k + 1 :], pk[k + 1 :])]
        prev = pivot
    return sign * m[-1][-1]


def bareiss_rank(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    nrow, ncol = len(m), len(m[0])
    rank, prev = 0, 1
    for c in range(ncol):
        p = next((i for i in range(rank, nrow) if m[i][c]), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        pivot, pr = m[rank][c], m[rank]
        for i in range(rank + 1, nrow):
            f = m[i][c]
            m[i] = [(pivot * x - f * y) // prev for x, y in zip(m[i], pr)]
        prev = pivot
        rank += 1
    return rank


def fraction_free_inverse(
    rows: list[list[int]], pivot_rows: Sequence[int] | None = None
) -> tuple[int, list[list[int]]]:
    """Fraction-free Gauss-Jordan elimination on [A | I].

    Returns ``(det(A), adj(A))`` with exact integer arithmetic: every division
    is exact.  ``pivot_rows[c]`` (0-based) is the preferred pivot row for
    column c; other rows are tried in order when it is unusable.  For
    matrices that vanish below a unit antidiagonal, pivoting along the
    antidiagonal keeps every pivot equal to 1 and every row update a plain
    integer axpy.
    """
    s = len(rows)
    aug = [list(r) + [int(i == j) for j in range(s)] for i, r in enumerate(rows)]
    used = [False] * s
    order = []
    prev = 1
    for c in range(s):
        p = None
        if pivot_rows is not None:
            q = pivot_rows[c]
            if not used[q] and aug[q][c]:
                p = q
        if p is None:
            p = next((i for i in range(s) if not used[i] and aug[i][c]), None)
        if p is None:
            return 0, [[0] * s for _ in range(s)]
        used[p] = True
        order.append(p)
        pr = aug[p]
        pivot = pr[c]
        for i in range(s):
            if i == p:
                continue
            ri = aug[i]
            f = ri[c]
            if f == 0:
                if pivot != prev:
                    aug[i] = [(pivot * x) // prev for x in ri]
                continue
            if pivot == 1 and prev == 1:
                aug[i] = [x - f * y for x, y in zip(ri, pr)]
            else:
                aug[i] = [(pivot * x - f * y) // prev for x, y in zip(ri, pr)]
        prev = pivot
    # row order[c] of the left block is now prev * e_c
    det = prev * _permutation_sign(order)
    adj = [aug[order[c]][s:] for c in range(s)]
    if _permutation_sign(order) < 0:
        adj = [[-x for x in r] for r in adj]
    return det, adj


def _permutation_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def prefix_rows(rows: list[list[int]]) -> list[list[int]]:
    """Running column sums from the top: out[i] = rows[0] + ... + rows[i]."""
    return [list(r) for r in accumulate(rows, lambda acc, r: [x + y for x, y in zip(acc, r)])]


def t_left(A):
    """T @ A for the 0/1 matrix T with ones on and above the antidiagonal."""
    s = A.size
    cum = prefix_rows(A.rows)
    rows = [list(cum[s - 1 - i]) for i in range(s)]
    return _rewrap(A, rows)


def t_right(A):
    """A @ T."""
    s = A.size
    rows = []
    for r in A.rows:
        c = list(accumulate(r))
        rows.append([c[s - 1 - j] for j in range(s)])
    return _rewrap(A, rows)


def t_sandwich(A):
    """T @ A @ T; entry (i, j) sums the top-left (s+1-i) x (s+1-j) block of A."""
    return t_right(t_left(A))


def t_inverse_left(A):
    """T^{-1} @ A, using row i of T^{-1} = e_{s+1-i} - e_{s+2-i} (1-based)."""
    s = A.size
    rows = []
    for i in range(s):
        top = A.rows[s - 1 - i]
        if i == 0:
            rows.append(list(top))
        else:
            rows.append([x - y for x, y in zip(top, A.rows[s - i])])
    return _rewrap(A, rows)


def _rewrap(A, rows):
    if isinstance(A, RatMatrix):
        return RatMatrix._make(rows, A.den)
    return IntMatrix._wrap(rows)
