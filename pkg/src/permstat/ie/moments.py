"""Binomial moments S_m of the jump indicators from subset types and nu_I.

For I of size m, irregularity z and type lam, the red-path graph on
I u (1+I) plus t isolated vertices has Z* = nu_I distinct-value labellings,
and E[X_I] = nu_I / (n)_(t + 2m - z).  Summing over types weighted by
:func:`count_subsets_of_type` gives S_m exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .. import exact
from .graphs import ColoredGraph, Z_star
from .subsets import (SubsetProfile, count_subsets_of_type, normalize_partition, profile_subset,
                      types_of_size)

# above this n the placement DP in the "tuples" method gets too many states
TUPLES_MAX_N = 24


def subset_graph(profile: SubsetProfile, t: int = 0) -> ColoredGraph:
    """Red edges {i, i+1} for i in I, plus ``t`` extra isolated vertices."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    vertices = sorted(profile.covered) + [("extra", k) for k in range(t)]
    red = [(i, i + 1) for i in profile.elements]
    return ColoredGraph.build(vertices, red)


def type_graph(m: int, lam: Iterable[int], t: int = 0) -> ColoredGraph:
    """The graph of any m-subset of type ``lam``: one red path with p + 1 edges
    per part p, m - z - rho single red edges and t isolated vertices."""
    parts = normalize_partition(lam)
    z = sum(parts)
    singles = m - z - len(parts)
    if singles < 0:
        raise ValueError(f"no {m}-subset has type {list(parts)}")
    red = []
    nxt = 0
    for length in list(parts) + [0] * singles:
        for _ in range(length + 1):
            red.append((nxt, nxt + 1))
            nxt += 1
        nxt += 1
    vertices = list(range(nxt)) + [("extra", k) for k in range(t)]
    return ColoredGraph.build(vertices, red)


def _auto_method(n: int) -> str:
    return "tuples" if n <= TUPLES_MAX_N else "pie"


def nu(indices, n: int, d: int, t: int = 0, method: str = "auto") -> int:
    """Distinct values h in [n] on I u (1+I) (+ t free points) with every
    h(i+1) - h(i) in K, i in I."""
    profile = indices if isinstance(indices, SubsetProfile) else profile_subset(indices, n)
    graph = subset_graph(profile, t)
    if d == 0:
        return 0 if graph.red_edges else math.perm(n, len(graph.vertices))
    return Z_star(graph, n, d, method=_auto_method(n) if method == "auto" else method)


@lru_cache(maxsize=None)
def nu_of_type(m: int, lam: tuple[int, ...], n: int, d: int, t: int = 0,
               method: str = "auto") -> int:
    """nu for any m-subset of type ``lam`` (it depends on nothing else)."""
    graph = type_graph(m, lam, t)
    if d == 0:
        return 0 if graph.red_edges else math.perm(n, len(graph.vertices))
    return Z_star(graph, n, d, method=_auto_method(n) if method == "auto" else method)


def expectation_from_nu(nu_value: int, n: int, m: int, z: int, t: int = 0) -> Fraction:
    """E[X_I] = nu_I / (n (n-1) ... (n - t - 2m + z + 1))."""
    k = t + 2 * m - z
    if k > n:
        return Fraction(0)
    return Fraction(nu_value, math.perm(n, k))


def Sm_formula(n: int, d: int, m: int, method: str = "auto") -> Fraction:
    """S_m for the jump indicators |pi(i+1) - pi(i)| <= d, from types.

    S_m = sum over types lam of count(n, m, lam) * mu(lam) / (n)_(2m - z).
    """
    if n < 2:
        raise ValueError(f"needs n >= 2, got n = {n}")
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")
    if not 0 <= m <= n - 1:
        raise ValueError(f"m must lie in [0, {n - 1}], got {m}")
    if m == 0:
        return Fraction(1)
    if d == 0:
        return Fraction(0)
    total = Fraction(0)
    for lam in types_of_size(m):
        count = count_subsets_of_type(n, m, lam)
        if not count:
            continue
        z = sum(lam)
        total += count * expectation_from_nu(nu_of_type(m, lam, n, d, 0, method), n, m, z)
    return total


def Sm_leading(d: int, m: int) -> Fraction:
    """(2d)^m / m!, the large-n limit of S_m for the jump indicators."""
    return Fraction((2 * d) ** m, math.factorial(m))


def Sm_values(n: int, d: int, statistic: str, upto: int | None = None,
              max_exact_n: int = exact.DEFAULT_MAX_N) -> list[Fraction]:
    """S_0..S_upto: formula-based for "minjump", enumeration for "breadth"."""
    top = n - 1 if upto is None else min(upto, n - 1)
    if statistic == "minjump":
        return [Sm_formula(n, d, m) for m in range(top + 1)]
    if statistic == "breadth":
        return [exact.exact_Sm(n, d, m, "breadth", max_n=max_exact_n) for m in range(top + 1)]
    raise ValueError(f"statistic must be breadth or minjump, got {statistic!r}")


def bonferroni_partial_sums(S: Iterable[Fraction]) -> list[Fraction]:
    """Running sums sum_{m <= r} (-1)^m S_m for r = 0, 1, ..."""
    out = []
    acc = Fraction(0)
    for m, s in enumerate(S):
        acc += s if m % 2 == 0 else -s
        out.append(acc)
    return out


def bracket_from_partials(partials: list[Fraction], r: int, tightest: bool = False
                          ) -> tuple[Fraction, Fraction]:
    """(lower, upper) from the nearest odd and even depths at or below r.

    With no odd depth available (r = 0) the lower end is the trivial bound 0.
    The width of this bracket is S_r, which grows while S_m is still rising;
    ``tightest=True`` instead intersects every bracket up to depth r with
    [0, 1], which can only shrink as r grows.
    """
    r = min(r, len(partials) - 1)
    if tightest:
        lower, upper = Fraction(0), Fraction(1)
        for depth in range(r + 1):
            if depth % 2:
                lower = max(lower, partials[depth])
            else:
                upper = min(upper, partials[depth])
        return lower, upper
    even = r if r % 2 == 0 else r - 1
    odd = r if r % 2 == 1 else r - 1
    lower = partials[odd] if odd >= 0 else Fraction(0)
    return lower, partials[even]


def bonferroni_bracket(n: int, d: int, r: int, statistic: str,
                       max_exact_n: int = exact.DEFAULT_MAX_N,
                       tightest: bool = False) -> tuple[Fraction, Fraction]:
    """Bonferroni bounds on Pr[no indicator fires] truncated at depth r.

    That probability is Pr[mj >= d + 1] for "minjump" and Pr[d(pi) >= d + 2]
    for "breadth".
    """
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    S = Sm_values(n, d, statistic, upto=r, max_exact_n=max_exact_n)
    return bracket_from_partials(bonferroni_partial_sums(S), r, tightest=tightest)
