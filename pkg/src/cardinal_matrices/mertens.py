"""Moebius and Mertens tables, Dirichlet coefficient vectors and block sums."""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Sequence

import numpy as np

from .divisors import DivisorSet


class SieveMemoryError(MemoryError):
    """The requested table does not fit the configured memory budget."""


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


@dataclass(frozen=True)
class SieveConfig:
    segment_threshold: int = 10**7
    segment_size: int = 1 << 18
    # bytes; the unsegmented sieve needs roughly 13 bytes per entry
    memory_budget: int = 2 << 30

    @classmethod
    def from_env(cls) -> "SieveConfig":
        return cls(
            segment_threshold=_env_int("CARDINAL_SEGMENT_THRESHOLD", cls.segment_threshold),
            segment_size=_env_int("CARDINAL_SEGMENT_SIZE", cls.segment_size),
            memory_budget=_env_int("CARDINAL_MEMORY_BUDGET", cls.memory_budget),
        )


_BYTES_PER_ENTRY = 13


@dataclass(frozen=True)
class MobiusTable:
    """mu(0..N) with the unused slot mu[0] = 0."""

    limit: int
    mu: np.ndarray

    def __getitem__(self, k):
        return int(self.mu[k])


@dataclass(frozen=True)
class MertensTable:
    limit: int
    M: np.ndarray

    def __call__(self, x) -> int:
        """M(floor(x)); zero for 0 <= x < 1."""
        k = int(x)
        if k < 0:
            raise ValueError("Mertens function is defined here for x >= 0")
        if k > self.limit:
            raise ValueError(f"table covers x <= {self.limit}, asked for {k}")
        return int(self.M[k])

    __getitem__ = __call__


def _small_primes(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags)


def _sieve_full(N: int) -> np.ndarray:
    mu = np.ones(N + 1, dtype=np.int8)
    mu[0] = 0
    for p in _small_primes(N).tolist():
        mu[p::p] *= -1
        mu[p * p :: p * p] = 0
    return mu


def _sieve_segment(lo: int, hi: int, primes: Sequence[int]) -> np.ndarray:
    """mu(x) for lo <= x < hi, given all primes up to isqrt(hi - 1)."""
    mu = np.ones(hi - lo, dtype=np.int8)
    radical = np.ones(hi - lo, dtype=np.int64)
    for p in primes:
        if p * p >= hi:
            break
        start = -lo % p
        mu[start::p] *= -1
        radical[start::p] *= p
        q = p * p
        mu[-lo % q :: q] = 0
    # at most one prime factor above sqrt(x) is left unaccounted for
    values = np.arange(lo, hi, dtype=np.int64)
    mu[radical != values] *= -1
    if lo == 0:
        mu[0] = 0
    return mu


def sieve_mobius(N: int, config: SieveConfig | None = None, segmented: bool | None = None) -> MobiusTable:
    """Moebius values up to N.

    ``segmented=None`` picks the segmented sieve once N reaches the configured
    threshold.  The unsegmented sieve refuses tables above the memory budget.
    """
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    N = int(N)
    config = config or SieveConfig.from_env()
    if segmented is None:
        segmented = N >= config.segment_threshold
    if not segmented:
        need = (N + 1) * _BYTES_PER_ENTRY
        if need > config.memory_budget:
            raise SieveMemoryError(
                f"unsegmented sieve up to {N} needs ~{need} bytes, budget is {config.memory_budget}"
            )
        return MobiusTable(N, _sieve_full(N))
    primes = _small_primes(isqrt(N) + 1).tolist()
    parts = [
        _sieve_segment(lo, min(lo + config.segment_size, N + 1), primes)
        for lo in range(0, N + 1, config.segment_size)
    ]
    return MobiusTable(N, np.concatenate(parts))


def mertens(N: int, config: SieveConfig | None = None, segmented: bool | None = None) -> MertensTable:
    table = sieve_mobius(N, config, segmented)
    M = np.cumsum(table.mu, dtype=np.int64)
    return MertensTable(table.limit, M)


class CoeffVector:
    """Prefix (a_1, ..., a_N) of a Dirichlet series, indexed from 1."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]):
        self.values = tuple(int(v) for v in values)

    @classmethod
    def ones(cls, N: int) -> "CoeffVector":
        return cls([1] * N)

    @classmethod
    def unit(cls, N: int) -> "CoeffVector":
        return cls([1] + [0] * (N - 1))

    @classmethod
    def zeros(cls, N: int) -> "CoeffVector":
        return cls([0] * N)

    @classmethod
    def mobius(cls, N: int) -> "CoeffVector":
        return cls(sieve_mobius(N).mu[1:].tolist())

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k: int) -> int:
        if not 1 <= k <= len(self.values):
            raise IndexError(f"coefficient index {k} outside 1..{len(self.values)}")
        return self.values[k - 1]

    def __add__(self, other: "CoeffVector") -> "CoeffVector":
        if len(self) != len(other):
            raise ValueError("length mismatch")
        return CoeffVector(a + b for a, b in zip(self.values, other.values))

    def __eq__(self, other):
        return isinstance(other, CoeffVector) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        head = ", ".join(map(str, self.values[:8]))
        return f"CoeffVector([{head}{', ...' if len(self) > 8 else ''}], N={len(self)})"


def block_sums(S: DivisorSet, a: CoeffVector) -> list[int]:
    """Sum of a_k over each block (k_{i-1}, k_i] of S, with k_0 = 0."""
    if len(a) < S.n:
        raise ValueError(f"coefficient vector of length {len(a)} does not cover 1..{S.n}")
    prefix = [0]
    total = 0
    for v in a.values[: S.n]:
        total += v
        prefix.append(total)
    out = []
    prev = 0
    for k in S.elements:
        out.append(prefix[k] - prefix[prev])
        prev = k
    return out
