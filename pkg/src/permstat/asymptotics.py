"""Limit laws for the minimum distance (Y) and the minimum jump (Z).

Pr[Y >= d + 2] = exp(-(d^2 + d)) and Pr[Z >= d + 1] = exp(-2d) for d >= 0.
Moments are summed in telescoped form, so only tail values enter the series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

KINDS = ("breadth", "minjump")


def lam(d: int) -> int:
    """d^2 + d, the limiting mean number of close-pair starters."""
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")
    return d * d + d


def _check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"kind must be 'breadth' or 'minjump', got {kind!r}")
    return kind


def floor_value(kind: str) -> int:
    return 2 if _check_kind(kind) == "breadth" else 1


def limit_tail(kind: str, threshold: int) -> float:
    """Pr[Y >= threshold] or Pr[Z >= threshold]."""
    d = threshold - floor_value(kind)
    if d <= 0:
        return 1.0
    if kind == "breadth":
        return math.exp(-lam(d))
    return math.exp(-2.0 * d)


def limit_pmf(kind: str, value: int) -> float:
    return limit_tail(kind, value) - limit_tail(kind, value + 1)


@dataclass(frozen=True)
class LimitLaw:
    kind: str
    tail: Callable[[int], float]

    @classmethod
    def of(cls, kind: str) -> "LimitLaw":
        _check_kind(kind)
        return cls(kind, lambda threshold: limit_tail(kind, threshold))

    def pmf(self, value: int) -> float:
        return self.tail(value) - self.tail(value + 1)


def predicted_counts(trials: int, kind: str, max_value: int) -> dict[int, float]:
    """Expected bucket counts trials * Pr[value] for value = floor..max_value."""
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    return {v: trials * limit_pmf(kind, v) for v in range(floor_value(kind), max_value + 1)}


def limit_moment(kind: str, a: int, tol: float = 1e-18) -> float:
    """a-th moment of the limit law.

    Y: 1 + sum_{d>=0} ((d+2)^a - (d+1)^a) exp(-d^2 - d)
    Z:     sum_{d>=0} ((d+1)^a - d^a) exp(-2d)

    Terms are added until the current term is below ``tol`` and the tail
    bound term * r / (1 - r), with r the current ratio of successive terms,
    is below ``tol`` too.  Both series have ratios that eventually decrease
    to zero (Y) or to exp(-2) (Z), so the bound holds from that point on.
    """
    _check_kind(kind)
    if a < 0:
        raise ValueError(f"a must be non-negative, got {a}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if a == 0:
        return 1.0
    if kind == "breadth":
        terms = [1.0]

        def term(d):
            return ((d + 2) ** a - (d + 1) ** a) * math.exp(-lam(d))
    else:
        terms = []

        def term(d):
            return ((d + 1) ** a - d ** a) * math.exp(-2.0 * d)

    d = 0
    prev = term(0)
    terms.append(prev)
    while True:
        d += 1
        cur = term(d)
        terms.append(cur)
        if cur < tol and prev > 0:
            r = cur / prev
            if r < 1 and cur * r / (1 - r) < tol:
                break
        prev = cur
    return math.fsum(terms)


def limit_moment_partial(kind: str, a: int, depth: int) -> float:
    """The same series cut after d = depth (for remainder checks)."""
    _check_kind(kind)
    if kind == "breadth":
        terms = [1.0] + [((d + 2) ** a - (d + 1) ** a) * math.exp(-lam(d))
                         for d in range(depth + 1)]
    else:
        terms = [((d + 1) ** a - d ** a) * math.exp(-2.0 * d) for d in range(depth + 1)]
    return math.fsum(terms)


def truncated_exp(lmbda: float, r: int) -> float:
    """sum_{m=0}^{r} (-1)^m lmbda^m / m!.

    By Taylor's theorem the error against exp(-lmbda) is at most
    lmbda^(r+1) / (r+1)!, see :func:`truncated_exp_remainder`.
    """
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    terms = []
    t = 1.0
    for m in range(r + 1):
        if m:
            t *= -lmbda / m
        terms.append(t)
    return math.fsum(terms)


def truncated_exp_remainder(lmbda: float, r: int) -> float:
    """lmbda^(r+1) / (r+1)!, computed in log space."""
    if lmbda == 0:
        return 0.0
    return math.exp((r + 1) * math.log(lmbda) - math.lgamma(r + 2))


def truncation_depth(d: int, n: int) -> int:
    """max(12 d^2, ceil(log2(n)^2)) -- the depth used for the breadth bound."""
    return max(12 * d * d, math.ceil(math.log2(n) ** 2))


@lru_cache(maxsize=None)
def stirling2(a: int, k: int) -> int:
    """Stirling number of the second kind S(a, k), exact."""
    if a < 0 or not 0 <= k <= a:
        raise ValueError(f"need 0 <= k <= a, got a = {a}, k = {k}")
    if a == 0:
        return 1
    if k == 0:
        return 0
    row = [1]  # S(0, .)
    for i in range(1, a + 1):
        new = [0] * (i + 1)
        for j in range(1, i + 1):
            new[j] = j * (row[j] if j < len(row) else 0) + row[j - 1]
        row = new
    return row[k]


@dataclass(frozen=True)
class ExpPolynomial:
    """b_a(x) = sum_k S(a, k) x^k, so that b_a(x) e^x = sum_m m^a x^m / m!."""

    degree: int
    coefficients: tuple[int, ...]

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def exp_polynomial(a: int) -> ExpPolynomial:
    if a < 0:
        raise ValueError(f"a must be non-negative, got {a}")
    return ExpPolynomial(a, tuple(stirling2(a, k) for k in range(a + 1)))
