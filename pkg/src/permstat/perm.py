"""Permutations in one-line notation and their spacing statistics.

All indices and values are 1-based at this interface.  Storage is a
read-only int64 numpy array of the values pi(1), ..., pi(n).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _kernels


class PermutationParseError(ValueError):
    """Raised when text or a sequence does not describe a permutation."""


class Permutation:
    """A bijection of [n] written as pi(1) pi(2) ... pi(n).

    >>> p = Permutation([1, 4, 7, 2, 5, 8, 3, 6, 9])
    >>> len(p), p[2]
    (9, 4)
    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int], check: bool = True):
        arr = np.array(list(values) if not isinstance(values, np.ndarray) else values,
                       dtype=np.int64)
        if arr.ndim != 1:
            raise PermutationParseError("a permutation must be a flat sequence")
        if check:
            _check_bijection(arr)
        arr.setflags(write=False)
        self._values = arr

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(np.arange(1, n + 1), check=False)

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse whitespace- or comma-separated 1-based values."""
        tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
        if not tokens:
            raise PermutationParseError("empty input: expected at least one value")
        values = []
        for pos, tok in enumerate(tokens, start=1):
            try:
                values.append(int(tok))
            except ValueError:
                raise PermutationParseError(
                    f"token {pos} ({tok!r}) is not an integer") from None
        return cls(values)

    @property
    def n(self) -> int:
        return self._values.shape[0]

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"index {i} outside [1, {self.n}]")
        return int(self._values[i - 1])

    def __iter__(self):
        return (int(v) for v in self._values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return np.array_equal(self._values, other._values)

    def __hash__(self) -> int:
        return hash(self._values.tobytes())

    def __str__(self) -> str:
        return " ".join(str(v) for v in self._values)

    def __repr__(self) -> str:
        return f"Permutation([{', '.join(str(v) for v in self._values)}])"

    def reverse(self) -> "Permutation":
        return Permutation(self._values[::-1].copy(), check=False)

    def complement(self) -> "Permutation":
        return Permutation(self.n + 1 - self._values, check=False)

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self._values)
        inv[self._values - 1] = np.arange(1, self.n + 1)
        return Permutation(inv, check=False)


def _check_bijection(arr: np.ndarray) -> None:
    n = arr.shape[0]
    if n == 0:
        raise PermutationParseError("a permutation needs at least one value")
    seen: dict[int, int] = {}
    problems = []
    for pos, v in enumerate(arr.tolist(), start=1):
        if not 1 <= v <= n:
            problems.append(f"value {v} at position {pos} is outside [1, {n}]")
        elif v in seen:
            problems.append(f"duplicate value {v} at positions {seen[v]} and {pos}")
        else:
            seen[v] = pos
    if problems:
        missing = [v for v in range(1, n + 1) if v not in seen]
        if missing:
            problems.append("missing value(s) " + ", ".join(map(str, missing)))
        raise PermutationParseError("; ".join(problems))


def as_permutation(p) -> Permutation:
    return p if isinstance(p, Permutation) else Permutation(p)


def _require_n2(perm: Permutation) -> None:
    if perm.n < 2:
        raise ValueError(f"needs n >= 2, got n = {perm.n}")


@dataclass(frozen=True)
class ClosePairReport:
    """Close pairs of a permutation at threshold ``d``.

    ``pairs`` holds every (i, j), i < j, with distance below d + 2;
    ``starters[i - 1]`` is the indicator that index i opens such a pair.
    """

    d: int
    pairs: tuple[tuple[int, int], ...]
    starters: tuple[bool, ...] = field(repr=False)

    @property
    def starter_count(self) -> int:
        return sum(self.starters)

    def __bool__(self) -> bool:
        return bool(self.pairs)


def manhattan_distance(perm, i: int, j: int) -> int:
    """|i - j| + |pi(i) - pi(j)| for 1-based indices ``i != j``."""
    perm = as_permutation(perm)
    n = perm.n
    for idx in (i, j):
        if not 1 <= idx <= n:
            raise IndexError(f"index {idx} outside [1, {n}]")
    if i == j:
        raise ValueError("manhattan_distance needs two distinct indices")
    return abs(i - j) + abs(perm[i] - perm[j])


def breadth_band_limit(n: int) -> int:
    """Largest y >= 0 with y**2/2 + 2*y + 1 <= n.

    Every permutation of [n] has minimum distance at most y + 2.
    """
    if n < 2:
        raise ValueError(f"needs n >= 2, got n = {n}")
    return int(_kernels.band_limit(n))


def min_distance_naive(perm) -> int:
    """Minimum Manhattan distance over all C(n, 2) pairs of dots."""
    perm = as_permutation(perm)
    _require_n2(perm)
    return int(_kernels.min_distance_naive(perm.values))


def min_distance_banded(perm, w: int) -> int:
    """Minimum distance over pairs whose positions differ by at most ``w``.

    Equals the true minimum distance whenever ``w >= d(perm) - 1``; the
    window ``breadth_band_limit(n) + 1`` is always safe.
    """
    perm = as_permutation(perm)
    _require_n2(perm)
    if w < 1:
        raise ValueError(f"window must be >= 1, got {w}")
    result = int(_kernels.min_distance_banded(perm.values, w))
    if result > 2 * perm.n:
        raise RuntimeError("banded scan examined no pairs")
    return result


def min_jump(perm) -> int:
    """min |pi(i+1) - pi(i)| over adjacent positions."""
    perm = as_permutation(perm)
    _require_n2(perm)
    return int(_kernels.min_jump(perm.values))


def min_distance_adaptive(perm) -> int:
    """Minimum distance in expected linear time for uniform inputs.

    One pass computes the minimum jump; since d(pi) <= mj(pi) + 1 the banded
    scan then only needs window min(band_limit + 1, mj).
    """
    perm = as_permutation(perm)
    _require_n2(perm)
    return int(_kernels.min_distance_adaptive(perm.values))


def adaptive_window(perm) -> int:
    perm = as_permutation(perm)
    _require_n2(perm)
    return int(_kernels.adaptive_window(perm.n, _kernels.min_jump(perm.values)))


def close_pairs(perm, d: int) -> ClosePairReport:
    """All pairs at distance < d + 2 and the starter indicators X_1..X_{n-1}."""
    perm = as_permutation(perm)
    _require_n2(perm)
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")
    vals = perm.values
    n = perm.n
    pairs = []
    starters = [False] * (n - 1)
    for i in range(n - 1):
        # distance >= gap + 1, so partners sit within gap d
        for j in range(i + 1, min(n, i + d + 1)):
            if (j - i) + abs(int(vals[j]) - int(vals[i])) <= d + 1:
                pairs.append((i + 1, j + 1))
                starters[i] = True
    return ClosePairReport(d=d, pairs=tuple(pairs), starters=tuple(starters))


def is_prolific(perm, d: int) -> bool:
    """d-prolific test via the breadth criterion d(pi) >= d + 2."""
    return min_distance_adaptive(perm) >= d + 2


def parse_many(lines: Sequence[str]) -> list[Permutation]:
    return [Permutation.from_text(line) for line in lines if line.strip()]
