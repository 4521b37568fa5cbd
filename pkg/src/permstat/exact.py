"""Ground truth by walking every permutation of [n] for small n.

Probabilities are ``fractions.Fraction`` values in lowest terms; nothing in
this module touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from . import _kernels
from .errors import InvariantViolation
from .perm import breadth_band_limit

DEFAULT_MAX_N = 11
HARD_MAX_N = 12

STATISTICS = ("breadth", "minjump", "closepairs")
INDICATORS = ("breadth", "minjump")


class EnumerationCapError(ValueError):
    """n is above the enumeration cap."""


@dataclass(frozen=True)
class ExactDistribution:
    """Exact counts of a statistic over all n! permutations."""

    n: int
    statistic_name: str
    counts: dict[int, int]
    total: int

    def __post_init__(self):
        if sum(self.counts.values()) != self.total or self.total != math.factorial(self.n):
            raise InvariantViolation("counts do not sum to n!")
        lo, hi = statistic_range(self.n, self.statistic_name)
        for v in self.counts:
            if not lo <= v <= hi:
                raise InvariantViolation(f"value {v} outside proven range [{lo}, {hi}]")

    def prob(self, value: int) -> Fraction:
        return Fraction(self.counts.get(value, 0), self.total)

    def tail(self, threshold: int) -> Fraction:
        return Fraction(sum(c for v, c in self.counts.items() if v >= threshold), self.total)

    def mean(self) -> Fraction:
        return Fraction(sum(v * c for v, c in self.counts.items()), self.total)

    def moment(self, a: int) -> Fraction:
        return Fraction(sum(v ** a * c for v, c in self.counts.items()), self.total)

    def variance(self) -> Fraction:
        mu = self.mean()
        return self.moment(2) - mu * mu


def parse_statistic(statistic: str, d: int | None = None) -> tuple[str, int | None]:
    """Split names like ``"closepairs@2"`` into ("closepairs", 2)."""
    name, _, suffix = statistic.partition("@")
    if name not in STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}; expected one of "
                         "breadth, minjump, closepairs@d")
    if suffix:
        try:
            d = int(suffix)
        except ValueError:
            raise ValueError(f"bad threshold in {statistic!r}") from None
    if name == "closepairs":
        if d is None or d < 0:
            raise ValueError("closepairs needs a non-negative threshold, e.g. closepairs@2")
        return name, d
    return name, None


def statistic_range(n: int, statistic: str) -> tuple[int, int]:
    name = statistic.partition("@")[0]
    if name == "breadth":
        return 2, breadth_band_limit(n) + 2
    if name == "minjump":
        return 1, n - 1
    return 0, n * (n - 1) // 2


def _check_n(n: int, max_n: int) -> None:
    if max_n > HARD_MAX_N:
        raise EnumerationCapError(f"the enumeration cap cannot exceed {HARD_MAX_N}")
    if n < 2:
        raise ValueError(f"needs n >= 2, got n = {n}")
    if n > max_n:
        raise EnumerationCapError(
            f"n = {n} exceeds the enumeration cap {max_n} ({math.factorial(n)} permutations)")


_CACHE: dict[tuple[int, int], tuple[np.ndarray, ...]] = {}


def _walk(n: int, d: int) -> tuple[np.ndarray, ...]:
    key = (n, d)
    if key not in _CACHE:
        arrays = _kernels.enumerate_all(n, d)
        for arr in arrays:
            arr.setflags(write=False)
        _CACHE[key] = arrays
    return _CACHE[key]


def _walk_any(n: int) -> tuple[np.ndarray, ...]:
    # breadth and min-jump histograms do not depend on the threshold
    for (m, d), arrays in _CACHE.items():
        if m == n:
            return arrays
    return _walk(n, 0)


def enumerate_distribution(n: int, statistic: str, d: int | None = None,
                           max_n: int = DEFAULT_MAX_N) -> ExactDistribution:
    """Exact distribution of ``statistic`` over S_n.

    ``statistic`` is "breadth", "minjump", or "closepairs@d" (the number of
    index pairs at distance < d + 2).
    """
    name, d = parse_statistic(statistic, d)
    _check_n(n, max_n)
    if name == "closepairs":
        hist = _walk(n, d)[2]
        label = f"closepairs@{d}"
    else:
        arrays = _walk_any(n)
        hist = arrays[0] if name == "breadth" else arrays[1]
        label = name
    counts = {int(v): int(c) for v, c in enumerate(hist) if c}
    return ExactDistribution(n=n, statistic_name=label, counts=counts,
                             total=math.factorial(n))


def exact_prob_ge(n: int, statistic: str, threshold: int, d: int | None = None,
                  max_n: int = DEFAULT_MAX_N) -> Fraction:
    """Pr[statistic >= threshold] for uniform pi in S_n, as a reduced fraction."""
    return enumerate_distribution(n, statistic, d=d, max_n=max_n).tail(threshold)


def indicator_threshold(statistic: str, d: int) -> int:
    """The tail threshold whose event is "no indicator fires" at level ``d``.

    Breadth indicators (close-pair starters) all vanish iff d(pi) >= d + 2;
    jump indicators vanish iff mj(pi) >= d + 1.
    """
    if statistic == "breadth":
        return d + 2
    if statistic == "minjump":
        return d + 1
    raise ValueError(f"indicator family must be breadth or minjump, got {statistic!r}")


def _mask_counts(n: int, d: int, statistic: str) -> np.ndarray:
    arrays = _walk(n, d)
    if statistic == "minjump":
        return arrays[3]
    if statistic == "breadth":
        return arrays[4]
    raise ValueError(f"indicator family must be breadth or minjump, got {statistic!r}")


_SUPERSET_CACHE: dict[tuple[int, int, str], np.ndarray] = {}


def superset_counts(n: int, d: int, statistic: str, max_n: int = DEFAULT_MAX_N) -> np.ndarray:
    """Entry ``I`` (as a bitmask) is the number of permutations with X_I = 1."""
    _check_n(n, max_n)
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")
    key = (n, d, statistic)
    if key not in _SUPERSET_CACHE:
        f = _mask_counts(n, d, statistic).copy()
        width = n - 1
        for bit in range(width):
            view = f.reshape(-1, 2, 1 << bit)
            view[:, 0, :] += view[:, 1, :]
        f.setflags(write=False)
        _SUPERSET_CACHE[key] = f
    return _SUPERSET_CACHE[key]


def subset_mask(indices: Iterable[int], n: int) -> int:
    mask = 0
    for i in indices:
        if not 1 <= i <= n - 1:
            raise ValueError(f"index {i} outside [1, {n - 1}]")
        mask |= 1 << (i - 1)
    return mask


def exact_expectation(n: int, d: int, indices: Iterable[int], statistic: str,
                      max_n: int = DEFAULT_MAX_N) -> Fraction:
    """E[X_I] for the subset ``I`` of [n-1], by enumeration."""
    f = superset_counts(n, d, statistic, max_n=max_n)
    return Fraction(int(f[subset_mask(indices, n)]), math.factorial(n))


def exact_Sm(n: int, d: int, m: int, statistic: str,
             max_n: int = DEFAULT_MAX_N) -> Fraction:
    """S_m = sum over m-subsets I of [n-1] of E[X_I], by enumeration.

    ``statistic`` picks the indicator family: "breadth" uses close-pair
    starters at threshold d, "minjump" uses |pi(i+1) - pi(i)| <= d.
    """
    if not 0 <= m <= n - 1:
        raise ValueError(f"m must lie in [0, {n - 1}], got {m}")
    f = superset_counts(n, d, statistic, max_n=max_n)
    sizes = _popcounts(n - 1)
    total = int(f[sizes == m].sum(dtype=np.int64))
    return Fraction(total, math.factorial(n))


def exact_Sm_all(n: int, d: int, statistic: str, max_n: int = DEFAULT_MAX_N) -> list[Fraction]:
    return [exact_Sm(n, d, m, statistic, max_n=max_n) for m in range(n)]


def _popcounts(width: int) -> np.ndarray:
    idx = np.arange(1 << width)
    counts = np.zeros(1 << width, dtype=np.int64)
    for bit in range(width):
        counts += (idx >> bit) & 1
    return counts


def exact_indicator_tail(n: int, d: int, statistic: str,
                         max_n: int = DEFAULT_MAX_N) -> Fraction:
    """Pr[all indicators vanish], read straight off the mask counts."""
    _check_n(n, max_n)
    return Fraction(int(_mask_counts(n, d, statistic)[0]), math.factorial(n))


def closepair_mean_formula(n: int, d: int) -> Fraction:
    """Exact E[number of close pairs] for uniform pi, summed by gap.

    A pair at position gap g (1 <= g <= d) is close iff its value gap k
    satisfies 1 <= k <= d + 1 - g; there are 2(n - k) ordered value pairs
    at gap k out of n(n-1).
    """
    total = Fraction(0)
    for g in range(1, min(d, n - 1) + 1):
        good = sum(2 * (n - k) for k in range(1, min(d + 1 - g, n - 1) + 1))
        total += Fraction((n - g) * good, n * (n - 1))
    return total
