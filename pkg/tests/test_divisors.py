from math import isqrt

import pytest
from hypothesis import given, strategies as st

from cardinal_matrices.divisors import (
    build_divisor_set,
    involution,
    locate_block,
    predecessor,
    successor,
)


def brute(n):
    return tuple(sorted({n // k for k in range(1, n + 1)}))


@pytest.mark.parametrize(
    "n, elements",
    [(16, (1, 2, 3, 4, 5, 8, 16)), (1, (1,)), (12, (1, 2, 3, 4, 6, 12))],
)
def test_examples(n, elements):
    S = build_divisor_set(n)
    assert S.elements == elements
    assert S.s == len(elements)


@given(st.integers(1, 5000))
def test_matches_brute_force(n):
    S = build_divisor_set(n)
    assert S.elements == brute(n)
    m = isqrt(n)
    assert S.s in (2 * m, 2 * m - 1)
    assert S[1] == 1 and S[S.s] == n


@given(st.integers(1, 20000))
def test_involution_is_index_reversal(n):
    S = build_divisor_set(n)
    for i in range(1, S.s + 1):
        k = S[i]
        assert involution(S, k) == n // k == S[S.s + 1 - i]
        assert involution(S, involution(S, k)) == k


@pytest.mark.parametrize("n", [0, -3])
def test_rejects_nonpositive(n):
    with pytest.raises(ValueError):
        build_divisor_set(n)


def test_involution_examples():
    S = build_divisor_set(16)
    assert involution(S, 2) == 8
    assert involution(S, 4) == 4
    assert involution(S, 1) == 16
    with pytest.raises(ValueError):
        involution(S, 6)


def test_predecessor_successor():
    S16 = build_divisor_set(16)
    assert predecessor(S16, 8) == 5
    assert predecessor(S16, 1) == 0
    assert predecessor(S16, 3) == 2
    assert successor(S16, 5) == 8
    assert successor(S16, 1) == 2
    assert successor(build_divisor_set(12), 4) == 6
    with pytest.raises(ValueError):
        successor(S16, 16)
    with pytest.raises(ValueError):
        successor(S16, 7)
    with pytest.raises(ValueError):
        predecessor(S16, 7)


def test_locate_block_examples():
    S = build_divisor_set(16)
    assert S[locate_block(S, 6)] == 8
    assert S[locate_block(S, 10)] == 16
    assert S[locate_block(S, 4)] == 4
    for x in (0, 17):
        with pytest.raises(ValueError):
            locate_block(S, x)


@given(st.integers(1, 3000), st.data())
def test_locate_block_brackets(n, data):
    S = build_divisor_set(n)
    x = data.draw(st.integers(1, n))
    i = locate_block(S, x)
    assert predecessor(S, S[i]) < x <= S[i]


def test_split_into_halves():
    S = build_divisor_set(16)
    assert S.small_part() == (1, 2, 3, 4)
    assert S.large_part() == (5, 8, 16)
    assert S.is_small(4) and not S.is_small(5)


@given(st.integers(1, 20000))
def test_halves_partition(n):
    S = build_divisor_set(n)
    assert S.small_part() + S.large_part() == S.elements
    m = isqrt(n)
    assert S.halves_overlap() == (n // m == m)
    assert S.s == 2 * m - S.halves_overlap()
