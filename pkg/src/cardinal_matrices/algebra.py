"""Cardinal's commutative algebra of approximate divisors.

The generator rho(k) acts on the basis indexed by S_n: column j carries a
single 1 in the row of the block (k_{i-1}, k_i] containing k_j * k, or is
zero when k_j * k > n.  Because every column has at most one nonzero, each
generator is also stored as a partial map on 0-based indices, and matrix
products of generators are compositions of those maps.
"""

from __future__ import annotations

from itertools import combinations

from .divisors import DivisorSet, locate_block
from .matrices import IntMatrix
from .mertens import CoeffVector, block_sums
from .report import CheckReport, compare


def rho_map(S: DivisorSet, k: int) -> tuple[int | None, ...]:
    """Row index (0-based) hit by each column of rho(k), None for a zero column."""
    S.index(k)
    n = S.n
    return tuple(
        locate_block(S, kj * k) - 1 if kj * k <= n else None for kj in S.elements
    )


def rho(S: DivisorSet, k: int) -> IntMatrix:
    s = S.s
    m = IntMatrix.zeros(s)
    for j, i in enumerate(rho_map(S, k)):
        if i is not None:
            m.rows[i][j] = 1
    return m


def hom_image(S: DivisorSet, a: CoeffVector) -> IntMatrix:
    """Image of the Dirichlet series with coefficients a: sum_m c_m rho(m)."""
    coeffs = block_sums(S, a)
    m = IntMatrix.zeros(S.s)
    for c, k in zip(coeffs, S.elements):
        if c:
            for j, i in enumerate(rho_map(S, k)):
                if i is not None:
                    m.rows[i][j] += c
    return m


def zeta_matrix(S: DivisorSet) -> IntMatrix:
    """Z_n, the image of the all-ones series."""
    return hom_image(S, CoeffVector.ones(S.n))


def mobius_matrix(S: DivisorSet) -> IntMatrix:
    """Z_n^{-1}, the image of the Moebius series."""
    return hom_image(S, CoeffVector.mobius(S.n))


def dirichlet_convolve(a: CoeffVector, b: CoeffVector) -> CoeffVector:
    N = len(a)
    if len(b) != N:
        raise ValueError(f"length mismatch: {N} vs {len(b)}")
    av, bv = a.values, b.values
    out = [0] * N
    for d in range(1, N + 1):
        ad = av[d - 1]
        if not ad:
            continue
        for m in range(1, N // d + 1):
            bm = bv[m - 1]
            if bm:
                out[d * m - 1] += ad * bm
    return CoeffVector(out)


def verify_homomorphism(S: DivisorSet, a: CoeffVector, b: CoeffVector) -> CheckReport:
    if len(a) < S.n or len(b) < S.n:
        raise ValueError(f"coefficient vectors must cover 1..{S.n}")
    N = min(len(a), len(b))
    a = CoeffVector(a.values[:N])
    b = CoeffVector(b.values[:N])
    lhs = hom_image(S, dirichlet_convolve(a, b))
    rhs = hom_image(S, a) @ hom_image(S, b)
    return compare("homomorphism", lhs, rhs)


def verify_commutativity(S: DivisorSet) -> CheckReport:
    """rho(a) rho(b) == rho(b) rho(a) for every pair of generators.

    The product of two generators sends column j to f_a(f_b(j)), so equality
    of the products is equality of the composed partial maps.
    """
    maps = {k: rho_map(S, k) for k in S.elements}

    def compose(f, g):
        return tuple(None if x is None else f[x] for x in g)

    for a, b in combinations(S.elements, 2):
        fa, fb = maps[a], maps[b]
        ab, ba = compose(fa, fb), compose(fb, fa)
        if ab != ba:
            j = next(j for j in range(S.s) if ab[j] != ba[j])
            col = j + 1
            row = (ab[j] if ab[j] is not None else ba[j]) + 1
            return CheckReport(
                "commutativity", False, (row, col), f"rho({a}) and rho({b}) do not commute"
            )
    return CheckReport("commutativity", True, detail=f"{S.s * (S.s - 1) // 2} pairs")
