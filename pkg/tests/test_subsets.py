import itertools
import math
from collections import Counter

import pytest

from permstat.ie import count_subsets_of_type, partitions, profile_subset, types_of_size


def test_worked_example():
    prof = profile_subset({3, 4, 6, 7, 8, 10}, 12)
    assert prof.run_lengths == (2, 3, 1)
    assert prof.type_partition == (2, 1)
    assert prof.irregularity == 3
    assert prof.run_count == 3
    assert len(prof.covered) == 2 * prof.size - prof.irregularity


def test_empty_and_errors():
    prof = profile_subset([], 5)
    assert prof.type_partition == () and prof.run_count == 0
    with pytest.raises(ValueError):
        profile_subset([5], 5)
    with pytest.raises(ValueError):
        count_subsets_of_type(10, 3, [0])


def test_partitions():
    assert list(partitions(0)) == [()]
    assert sorted(partitions(4)) == sorted([(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
    assert [len(list(partitions(z))) for z in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert list(types_of_size(0)) == [()]
    assert sorted(types_of_size(3)) == [(), (1,), (2,)]


@pytest.mark.parametrize("n", range(2, 13))
def test_type_counts_against_enumeration(n):
    for m in range(0, min(5, n - 1) + 1):
        seen = Counter(profile_subset(I, n).type_partition
                       for I in itertools.combinations(range(1, n), m))
        for lam in types_of_size(m):
            assert count_subsets_of_type(n, m, lam) == seen.get(lam, 0), (n, m, lam)
        assert sum(count_subsets_of_type(n, m, lam) for lam in types_of_size(m)) \
            == math.comb(n - 1, m)


def test_alternative_gap_binomial_is_only_an_upper_bound():
    # replacing C(n-m, m-z) by C(n+1-m, m-z) overcounts
    strict = 0
    for n in range(4, 13):
        for m in range(1, min(5, n - 1) + 1):
            for lam in types_of_size(m):
                exact = count_subsets_of_type(n, m, lam)
                c = m - sum(lam)
                if not exact:
                    continue
                looser = exact // math.comb(n - m, c) * math.comb(n + 1 - m, c)
                assert looser >= exact
                strict += looser > exact
    assert strict > 0
