import itertools
import math
from collections import defaultdict
from fractions import Fraction

import pytest

from permstat import exact
from permstat.ie import (Sm_formula, Sm_leading, bonferroni_bracket, bonferroni_partial_sums,
                         bracket_from_partials, expectation_from_nu, nu, nu_of_type,
                         profile_subset, type_graph, Z_star)


def test_type_graph_shape():
    g = type_graph(6, (2, 1))
    # m = 6, z = 3: runs of 3, 2 and 1 edges -> 2m - z = 9 vertices
    assert len(g.vertices) == 9 and len(g.red_edges) == 6
    assert len(g.components()) == 3
    with pytest.raises(ValueError):
        type_graph(2, (2,))


@pytest.mark.parametrize("d", [1, 2])
def test_nu_depends_only_on_type(d):
    n = 13
    by_type = defaultdict(list)
    for m in (2, 3, 4):
        for I in itertools.combinations(range(1, n), m):
            by_type[(m, profile_subset(I, n).type_partition)].append(I)
    for (m, lam), sets in by_type.items():
        picks = [sets[0], sets[len(sets) // 2], sets[-1]]
        assert len(set(picks)) == 3
        values = {nu(I, n, d) for I in picks}
        assert values == {nu_of_type(m, lam, n, d)}


@pytest.mark.parametrize("n", [6, 7, 8])
@pytest.mark.parametrize("d", [1, 2])
def test_nu_counts_permutations(n, d):
    """nu_I (n - 2m + z)! is the number of permutations with every X_i = 1, i in I."""
    for m in range(1, n):
        for I in itertools.islice(itertools.combinations(range(1, n), m), 12):
            prof = profile_subset(I, n)
            count = exact.exact_expectation(n, d, I, "minjump") * math.factorial(n)
            assert nu(prof, n, d) * math.factorial(n - 2 * m + prof.irregularity) == count
            assert expectation_from_nu(nu(prof, n, d), n, m, prof.irregularity) \
                == exact.exact_expectation(n, d, I, "minjump")


def test_nu_methods_agree():
    for lam, m in [((), 3), ((1,), 3), ((2,), 3), ((1, 1), 4)]:
        g = type_graph(m, lam)
        for n in (15, 30):
            assert Z_star(g, n, 2, method="tuples") == Z_star(g, n, 2, method="pie")


def test_nu_with_extra_points():
    # t isolated vertices multiply by the falling factorial of what is left
    base = nu([2, 3], 10, 1)
    assert nu([2, 3], 10, 1, t=2) == base * 7 * 6


def test_sm_examples():
    assert Sm_formula(6, 1, 1) == Fraction(5, 3)
    assert Sm_formula(10, 2, 0) == 1
    assert Sm_formula(10, 0, 3) == 0
    with pytest.raises(ValueError):
        Sm_formula(5, 1, 5)
    assert Sm_leading(2, 3) == Fraction(64, 6)


@pytest.mark.parametrize("n", range(2, 8))
def test_sm_formula_matches_enumeration(n):
    for d in (0, 1, 2):
        for m in range(n):
            assert Sm_formula(n, d, m) == exact.exact_Sm(n, d, m, "minjump")


def test_sm_formula_trend():
    """(S_m m!/(2d)^m - 1) shrinks roughly like 1/n."""
    d = 1
    for m in (1, 2, 3):
        errs = [abs(float(Sm_formula(n, d, m) / Sm_leading(d, m)) - 1) for n in (50, 100, 200)]
        assert errs[0] > errs[1] > errs[2]
        scaled = [e * n for e, n in zip(errs, (50, 100, 200))]
        assert max(scaled) / min(scaled) < 1.5


def test_bracket_examples():
    lower, upper = bonferroni_bracket(8, 1, 0, "minjump")
    assert (lower, upper) == (0, 1)
    target = exact.exact_prob_ge(8, "minjump", 2)
    lower, upper = bonferroni_bracket(8, 1, 3, "minjump")
    assert lower <= target <= upper
    with pytest.raises(ValueError):
        bonferroni_bracket(8, 1, -1, "minjump")


@pytest.mark.parametrize("statistic", ["breadth", "minjump"])
@pytest.mark.parametrize("n", [6, 8, 9])
def test_bracket_widths(statistic, n):
    d = 2 if n < 9 else 1
    S = ([Sm_formula(n, d, m) for m in range(n)] if statistic == "minjump"
         else exact.exact_Sm_all(n, d, statistic))
    partials = bonferroni_partial_sums(S)
    target = exact.exact_indicator_tail(n, d, statistic)
    peak = max(range(n), key=lambda m: S[m])
    prev_tight = prev_near = None
    for r in range(n):
        lo, hi = bracket_from_partials(partials, r, tightest=True)
        assert lo <= target <= hi
        if prev_tight is not None:
            assert hi - lo <= prev_tight
        prev_tight = hi - lo
        lo, hi = bracket_from_partials(partials, r)
        assert lo <= target <= hi
        if r >= 1:
            assert hi - lo == S[r]
        if r > peak and prev_near is not None:
            assert hi - lo <= prev_near
        prev_near = hi - lo


def test_nearest_depth_width_can_grow():
    # S_1 < S_2 here, so the plain bracket widens from depth 1 to depth 2
    S = exact.exact_Sm_all(8, 2, "minjump")
    assert S[2] > S[1]
