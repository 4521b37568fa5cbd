"""Run decomposition, type and irregularity of index subsets of [n-1]."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class SubsetProfile:
    """A subset I of [n-1] together with its run structure.

    ``type_partition`` lists (run length - 1) for every run of length >= 2,
    largest first; ``irregularity`` is its sum z, and ``run_count`` is
    c = |I| - z.
    """

    universe_n: int
    elements: tuple[int, ...]
    run_lengths: tuple[int, ...]
    type_partition: tuple[int, ...]
    irregularity: int
    run_count: int

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def covered(self) -> frozenset[int]:
        """I together with 1 + I (the positions whose values are constrained)."""
        return frozenset(self.elements) | frozenset(i + 1 for i in self.elements)


def profile_subset(indices: Iterable[int], n: int) -> SubsetProfile:
    elements = tuple(sorted(set(indices)))
    for i in elements:
        if not 1 <= i <= n - 1:
            raise ValueError(f"element {i} outside [1, {n - 1}]")
    runs = []
    for i in elements:
        if runs and i == runs[-1][1] + 1:
            runs[-1][1] = i
        else:
            runs.append([i, i])
    lengths = tuple(hi - lo + 1 for lo, hi in runs)
    lam = tuple(sorted((l - 1 for l in lengths if l >= 2), reverse=True))
    z = sum(lam)
    return SubsetProfile(universe_n=n, elements=elements, run_lengths=lengths,
                         type_partition=lam, irregularity=z, run_count=len(runs))


def normalize_partition(lam: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(sorted(lam, reverse=True))
    for p in parts:
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"partition parts must be positive integers, got {parts}")
    return parts


def partitions(z: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``z`` as non-increasing tuples; () for z = 0."""
    if z == 0:
        yield ()
        return
    top = z if max_part is None else min(z, max_part)
    for first in range(top, 0, -1):
        for rest in partitions(z - first, first):
            yield (first,) + rest


def count_subsets_of_type(n: int, m: int, lam: Iterable[int]) -> int:
    """Number of m-subsets of [n-1] whose type is ``lam``.

    The c = m - z runs take lengths in multinomial(c; u_1, ..., u_z, c - rho)
    orders, and the c + 1 gaps (inner ones positive) summing to n - 1 - m
    can be chosen in C(n - m, c) ways.
    """
    parts = normalize_partition(lam)
    z = sum(parts)
    rho = len(parts)
    if m < z + rho or m > n - 1:
        return 0
    c = m - z
    multi = math.factorial(c) // math.factorial(c - rho)
    for u in Counter(parts).values():
        multi //= math.factorial(u)
    if n - m < c:
        return 0
    return multi * math.comb(n - m, c)


def types_of_size(m: int) -> Iterator[tuple[int, ...]]:
    """Every type that an m-subset can have (z + rho <= m)."""
    for z in range(max(m, 1)):
        for lam in partitions(z):
            if z + len(lam) <= m:
                yield lam
