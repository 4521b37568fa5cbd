import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permstat import perm
from permstat.perm import Permutation, PermutationParseError

from conftest import all_perms, brute_distance, brute_jump


def test_lattice9_statistics(lattice9):
    p = Permutation(lattice9)
    assert perm.min_distance_naive(p) == 4
    assert perm.min_distance_adaptive(p) == 4
    assert perm.min_jump(p) == 3
    assert perm.breadth_band_limit(9) == 2
    assert perm.min_distance_banded(p, 8) == 4


def test_manhattan_examples(lattice9):
    assert perm.manhattan_distance(lattice9, 1, 2) == 4
    assert perm.manhattan_distance(lattice9, 1, 4) == 4
    assert perm.manhattan_distance(Permutation.identity(5), 3, 4) == 2


def test_manhattan_errors(lattice9):
    with pytest.raises(ValueError):
        perm.manhattan_distance(lattice9, 2, 2)
    with pytest.raises(IndexError):
        perm.manhattan_distance(lattice9, 0, 2)
    with pytest.raises(IndexError):
        perm.manhattan_distance(lattice9, 1, 10)


def test_small_examples():
    assert perm.min_distance_naive([2, 4, 1, 3]) == 3
    assert perm.min_jump([2, 4, 1, 3]) == 2
    for n in range(2, 12):
        assert perm.min_distance_naive(Permutation.identity(n)) == 2
        assert perm.min_jump(Permutation.identity(n)) == 1
    with pytest.raises(ValueError):
        perm.min_distance_naive([1])
    with pytest.raises(ValueError):
        perm.min_jump([1])


def test_band_limit():
    assert perm.breadth_band_limit(2) == 0
    assert perm.breadth_band_limit(9) == 2
    for n in range(2, 3000):
        y = perm.breadth_band_limit(n)
        assert y * y / 2 + 2 * y + 1 <= n < (y + 1) ** 2 / 2 + 2 * (y + 1) + 1
    with pytest.raises(ValueError):
        perm.breadth_band_limit(1)


def test_band_window_validation(lattice9):
    with pytest.raises(ValueError):
        perm.min_distance_banded(lattice9, 0)
    # window 1 only sees adjacent positions: 1 + mj
    assert perm.min_distance_banded(lattice9, 1) == 1 + 3


@pytest.mark.parametrize("n", range(2, 8))
def test_exhaustive_agreement(n):
    y = perm.breadth_band_limit(n)
    for values in all_perms(n):
        p = Permutation(values)
        d = brute_distance(values)
        mj = brute_jump(values)
        assert perm.min_distance_naive(p) == d
        assert perm.min_distance_banded(p, y + 1) == d
        assert perm.min_distance_adaptive(p) == d
        assert perm.min_jump(p) == mj
        assert 2 <= d <= y + 2
        assert d <= mj + 1
        assert perm.adaptive_window(p) == max(1, min(y + 1, mj))


@settings(max_examples=200, deadline=None)
@given(st.permutations(list(range(1, 40))))
def test_symmetries_preserve_statistics(values):
    p = Permutation(values)
    d = perm.min_distance_naive(p)
    for q in (p.reverse(), p.complement(), p.inverse()):
        assert perm.min_distance_adaptive(q) == d
    assert perm.min_jump(p.reverse()) == perm.min_jump(p)
    assert perm.min_jump(p.complement()) == perm.min_jump(p)
    assert p.inverse().inverse() == p


def test_close_pairs_report(lattice9):
    rep = perm.close_pairs(lattice9, 2)
    assert rep.pairs == ()
    assert rep.starter_count == 0
    assert not rep
    rep = perm.close_pairs(lattice9, 3)  # distance 4 now counts
    assert (1, 2) in rep.pairs and (1, 4) in rep.pairs
    for i, j in rep.pairs:
        assert perm.manhattan_distance(lattice9, i, j) <= 4
    assert len(rep.starters) == 8


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_close_pairs_against_brute_force(d):
    rng = np.random.default_rng(5)
    for _ in range(200):
        values = rng.permutation(12) + 1
        rep = perm.close_pairs(values, d)
        want = [(i + 1, j + 1) for i, j in itertools.combinations(range(12), 2)
                if (j - i) + abs(int(values[j]) - int(values[i])) < d + 2]
        assert list(rep.pairs) == want
        starters = [any(i == a for a, _ in want) for i in range(1, 12)]
        assert list(rep.starters) == starters


def test_prolific_equivalence(lattice9):
    assert perm.is_prolific(lattice9, 2)
    assert not perm.is_prolific(lattice9, 3)


def test_parse_text():
    assert list(Permutation.from_text("1 4 7 2 5 8 3 6 9")) == [1, 4, 7, 2, 5, 8, 3, 6, 9]
    assert list(Permutation.from_text(" 2,1 ,3\n")) == [2, 1, 3]
    assert perm.parse_many(["1 2", "", "2 1"]) == [Permutation([1, 2]), Permutation([2, 1])]


@pytest.mark.parametrize("text, fragment", [
    ("1 1 2", "duplicate value 1"),
    ("1 2 4", "value 4 at position 3"),
    ("1 x 2", "token 2"),
    ("", "empty"),
    ("0 1", "outside"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(PermutationParseError, match=fragment):
        Permutation.from_text(text)


def test_duplicate_names_missing_value():
    with pytest.raises(PermutationParseError, match="missing value\\(s\\) 3"):
        Permutation([1, 1, 2])


def test_permutation_is_immutable_and_hashable():
    p = Permutation([3, 1, 2])
    with pytest.raises(ValueError):
        p.values[0] = 1
    assert hash(p) == hash(Permutation([3, 1, 2]))
    assert p[1] == 3
    assert str(p) == "3 1 2"
