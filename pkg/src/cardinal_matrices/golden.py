"""Reference n = 16 instance: every matrix as printed, zeros written out.

Rows and columns follow the approximate divisors 1, 2, 3, 4, 5, 8, 16.
``U_TILDE_INV`` is kept exactly as printed; its (2,7) and (7,2) entries read
-1/2 there, while the product with ``U_TILDE`` only gives the identity with
-2 (see ``U_TILDE_INV_MISPRINTS``).
"""

from __future__ import annotations

from fractions import Fraction

N = 16
DIVISORS = (1, 2, 3, 4, 5, 8, 16)


def _table(text: str) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(
        tuple(Fraction(x) for x in line.split())
        for line in text.strip().splitlines()
    )


T = _table("""
1 1 1 1 1 1 1
1 1 1 1 1 1 0
1 1 1 1 1 0 0
1 1 1 1 0 0 0
1 1 1 0 0 0 0
1 1 0 0 0 0 0
1 0 0 0 0 0 0
""")

# generator k -> 1-based (row, column) positions of its ones
RHO_SUPPORT = {
    2: {(2, 1), (4, 2), (6, 3), (6, 4), (7, 5), (7, 6)},
    3: {(3, 1), (6, 2), (7, 3), (7, 4), (7, 5)},
    4: {(4, 1), (6, 2), (7, 3), (7, 4)},
    5: {(5, 1), (7, 2), (7, 3)},
}

T_RHO_2 = _table("""
1 1 1 1 1 1 0
1 1 1 1 0 0 0
1 1 0 0 0 0 0
1 1 0 0 0 0 0
1 0 0 0 0 0 0
1 0 0 0 0 0 0
0 0 0 0 0 0 0
""")

ZETA_VECTOR = (1, 1, 1, 1, 1, 3, 8)
MOBIUS_VECTOR = (1, -1, -1, 0, -1, 0, 1)

Z = _table("""
1 0 0 0 0 0 0
1 1 0 0 0 0 0
1 0 1 0 0 0 0
1 1 0 1 0 0 0
1 0 0 0 1 0 0
3 2 1 1 0 1 0
8 4 3 2 2 1 1
""")

Z_INV = _table("""
 1  0  0  0  0  0 0
-1  1  0  0  0  0 0
-1  0  1  0  0  0 0
 0 -1  0  1  0  0 0
-1  0  0  0  1  0 0
 0 -1 -1 -1  0  1 0
 1 -1 -2 -1 -2 -1 1
""")

U = _table("""
16 8 5 4 3 2 1
 8 4 2 2 1 1 0
 5 2 1 1 1 0 0
 4 2 1 1 0 0 0
 3 1 1 0 0 0 0
 2 1 0 0 0 0 0
 1 0 0 0 0 0 0
""")

U_INV = _table("""
0  0  0  0  0  0  1
0  0  0  0  0  1 -2
0  0  0  0  1 -1 -1
0  0  0  1 -1 -1  1
0  0  1 -1  0  0 -1
0  1 -1 -1  0  0  1
1 -2 -1  1 -1  1  2
""")

M = _table("""
-1 -2 -2 -1 -1 0 1
-2 -1  0  0  1 1 0
-2  0  1  1  1 0 0
-1  0  1  1  0 0 0
-1  1  1  0  0 0 0
 0  1  0  0  0 0 0
 1  0  0  0  0 0 0
""")

U_TILDE = _table("""
16    8   16/3  4    16/5  2 1
8     4   8/3   2    8/5   1 0
16/3  8/3 16/9  4/3  16/15 0 0
4     2   4/3   1    0     0 0
16/5  8/5 16/15 0    0     0 0
2     1   0     0    0     0 0
1     0   0     0    0     0 0
""")

U_TILDE_PLUS = _table("""
16   8    16/3  4    16/5  2    1
8    4    8/3   2    8/5   1    1/2
16/3 8/3  16/9  4/3  16/15 2/3  1/3
4    2    4/3   1    4/5   1/2  1/4
16/5 8/5  16/15 4/5  16/25 2/5  1/5
2    1    2/3   1/2  2/5   1/4  1/8
1    1/2  1/3   1/4  1/5   1/8  1/16
""")

U_TILDE_INV = _table("""
0    0     0     0     0     0     1
0    0     0     0     0     1    -1/2
0    0     0     0     15/16 -3/2  0
0    0     0     1    -5/4   0     0
0    0     15/16 -5/4  0     0     0
0    1    -3/2   0     0     0     0
1   -1/2   0     0     0     0     0
""")

# 1-based position -> (printed value, value forced by U_TILDE_INV @ U_TILDE = I)
U_TILDE_INV_MISPRINTS = {
    (2, 7): (Fraction(-1, 2), Fraction(-2)),
    (7, 2): (Fraction(-1, 2), Fraction(-2)),
}

E = _table("""
0   0   1/3  0   1/5  0 0
0   0   2/3  0   3/5  0 0
1/3 2/3 7/9  1/3 1/15 0 0
0   0   1/3  0   0    0 0
1/5 3/5 1/15 0   0    0 0
0   0   0    0   0    0 0
0   0   0    0   0    0 0
""")

E_TILDE = _table("""
0   0   1/3  0   1/5   0   0
0   0   2/3  0   3/5   0   1/2
1/3 2/3 7/9  1/3 1/15  2/3 1/3
0   0   1/3  0   4/5   1/2 1/4
1/5 3/5 1/15 4/5 16/25 2/5 1/5
0   0   2/3  1/2 2/5   1/4 1/8
0   1/2 1/3  1/4 1/5   1/8 1/16
""")

E_PLUS = _table("""
0 0   0   0   0     0   0
0 0   0   0   0     0   1/2
0 0   0   0   0     2/3 1/3
0 0   0   0   4/5   1/2 1/4
0 0   0   4/5 16/25 2/5 1/5
0 0   2/3 1/2 2/5   1/4 1/8
0 1/2 1/3 1/4 1/5   1/8 1/16
""")

Z_TILDE = _table("""
1   0   0     0   0     0 0
1   1   0     0   0     0 0
6/5 3/5 16/15 0   0     0 0
4/5 2/5 4/15  1   0     0 0
4/3 2/3 4/9   1/3 16/15 0 0
8/3 4/3 8/9   2/3 8/15  1 0
8   4   8/3   2   8/5   1 1
""")

W = _table("""
0    0    0    0    0    0 0
0    0    0    0    0    0 0
1/5  3/5  1/15 0    0    0 0
-1/5 -3/5 4/15 0    0    0 0
1/3  2/3  4/9  1/3  1/15 0 0
-1/3 -2/3 -1/9 -1/3 8/15 0 0
0    0    -1/3 0    -2/5 0 0
""")
