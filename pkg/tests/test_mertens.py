import numpy as np
import pytest
from hypothesis import given, strategies as st

from cardinal_matrices.divisors import build_divisor_set
from cardinal_matrices.mertens import (
    CoeffVector,
    SieveConfig,
    SieveMemoryError,
    block_sums,
    mertens,
    sieve_mobius,
)


def mu_naive(k):
    out, p = 1, 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            out = -out
        p += 1
    return -out if k > 1 else out


def test_mobius_examples():
    mu = sieve_mobius(20)
    assert mu[1] == 1 and mu[4] == 0
    assert (mu[10], mu[11], mu[12]) == (1, -1, 0)


def test_mobius_against_trial_division():
    mu = sieve_mobius(3000)
    assert [mu[k] for k in range(1, 3001)] == [mu_naive(k) for k in range(1, 3001)]


def test_divisor_sum_identity():
    N = 2000
    mu = sieve_mobius(N)
    acc = np.zeros(N + 1, dtype=np.int64)
    for d in range(1, N + 1):
        acc[d::d] += mu[d]
    assert acc[1] == 1 and not acc[2:].any()


@pytest.mark.parametrize("N", [1, 2, 97, 1000, 65537, 300001])
def test_segmented_equals_full(N):
    cfg = SieveConfig(segment_size=1000)
    a = sieve_mobius(N, cfg, segmented=False).mu
    b = sieve_mobius(N, cfg, segmented=True).mu
    assert np.array_equal(a, b)


def test_mertens_examples():
    M = mertens(16)
    assert M(0) == 0 and M(1) == 1 and M(16) == -1
    assert [M(8), M(5), M(4), M(3), M(2)] == [-2, -2, -1, -1, 0]
    assert M(2.5) == 0
    with pytest.raises(ValueError):
        M(17)


def test_mertens_prefix_invariant():
    N = 5000
    mu, M = sieve_mobius(N), mertens(N)
    assert M(0) == 0
    assert all(M(x) - M(x - 1) == mu[x] for x in range(1, N + 1))


def test_sieve_rejects_bad_input():
    with pytest.raises(ValueError):
        sieve_mobius(0)
    with pytest.raises(SieveMemoryError):
        sieve_mobius(10**6, SieveConfig(memory_budget=1000), segmented=False)
    # the segmented path ignores the whole-table budget
    assert sieve_mobius(10**5, SieveConfig(memory_budget=1000, segment_size=4096), segmented=True).limit == 10**5


def test_block_sums_examples():
    S = build_divisor_set(16)
    assert block_sums(S, CoeffVector.ones(16)) == [1, 1, 1, 1, 1, 3, 8]
    assert block_sums(S, CoeffVector.mobius(16)) == [1, -1, -1, 0, -1, 0, 1]
    assert block_sums(S, CoeffVector.zeros(16)) == [0] * 7
    with pytest.raises(ValueError):
        block_sums(S, CoeffVector.ones(15))


@given(st.integers(1, 500), st.data())
def test_block_sums_partition(n, data):
    S = build_divisor_set(n)
    vals = data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n + 3))
    a = CoeffVector(vals)
    sums = block_sums(S, a)
    assert sum(sums) == sum(vals[:n])
    prev = 0
    for k, total in zip(S.elements, sums):
        assert total == sum(vals[prev:k])
        prev = k


def test_coeff_vector_indexing():
    a = CoeffVector([3, 4, 5])
    assert a[1] == 3 and a[3] == 5
    with pytest.raises(IndexError):
        a[0]
    assert a + CoeffVector([1, 1, 1]) == CoeffVector([4, 5, 6])
