"""Approximate divisors of n: the distinct values of floor(n/k) for 1 <= k <= n.

Elements are kept in increasing order k_1 = 1 < k_2 < ... < k_s = n.  Indices
reported by this module (``index``, ``locate_block``) are 1-based.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from math import isqrt


@dataclass(frozen=True)
class DivisorSet:
    n: int
    elements: tuple[int, ...]
    _position: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_position", {k: i for i, k in enumerate(self.elements, 1)}
        )

    @property
    def s(self) -> int:
        return len(self.elements)

    @property
    def root(self) -> int:
        return isqrt(self.n)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, k) -> bool:
        return k in self._position

    def __getitem__(self, i: int) -> int:
        """k_i for a 1-based index i."""
        if not 1 <= i <= self.s:
            raise IndexError(f"index {i} outside 1..{self.s}")
        return self.elements[i - 1]

    def index(self, k: int) -> int:
        """1-based position of k."""
        try:
            return self._position[k]
        except KeyError:
            raise ValueError(f"{k} is not an approximate divisor of {self.n}") from None

    def is_small(self, k: int) -> bool:
        """True when k lies in the lower half {1, ..., isqrt(n)}."""
        self.index(k)
        return k <= self.root

    def small_part(self) -> tuple[int, ...]:
        return tuple(range(1, self.root + 1))

    def large_part(self) -> tuple[int, ...]:
        """The rest of S, i.e. the elements above isqrt(n)."""
        m = self.root
        return tuple(self.n // j for j in range(m, 0, -1) if self.n // j > m)

    def halves_overlap(self) -> bool:
        # n // m == m, so the two floor ranges share isqrt(n), exactly when n < m(m+1)
        m = self.root
        return self.n < m * (m + 1)


def build_divisor_set(n: int) -> DivisorSet:
    """Approximate divisors of n in O(sqrt(n)) steps."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    m = isqrt(n)
    small = list(range(1, m + 1))
    large = [n // j for j in range(m, 0, -1)]
    if large[0] == small[-1]:
        large = large[1:]
    return DivisorSet(n, tuple(small + large))


def involution(S: DivisorSet, k: int) -> int:
    S.index(k)
    return S.n // k


def predecessor(S: DivisorSet, k: int) -> int:
    """Largest element below k, with the convention that 1 maps to 0."""
    i = S.index(k)
    return S.elements[i - 2] if i > 1 else 0


def successor(S: DivisorSet, k: int) -> int:
    i = S.index(k)
    if i == S.s:
        raise ValueError(f"{k} = n has no successor")
    return S.elements[i]


def locate_block(S: DivisorSet, x: int) -> int:
    """1-based index i with predecessor(k_i) < x <= k_i."""
    if not 1 <= x <= S.n:
        raise ValueError(f"x = {x} outside [1, {S.n}]")
    return bisect_left(S.elements, x) + 1
