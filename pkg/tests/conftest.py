import itertools
import math

import pytest


def brute_distance(values):
    n = len(values)
    return min(abs(i - j) + abs(values[i] - values[j])
               for i in range(n) for j in range(i + 1, n))


def brute_jump(values):
    return min(abs(values[i + 1] - values[i]) for i in range(len(values) - 1))


def all_perms(n):
    return itertools.permutations(range(1, n + 1))


@pytest.fixture
def lattice9():
    return [1, 4, 7, 2, 5, 8, 3, 6, 9]


def falling(n, k):
    return math.perm(n, k)


# acceptance criteria register here; the summary hook prints one line each
ACCEPTANCE: dict[int, str] = {}


def record_criterion(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {title} ({detail})"
    ACCEPTANCE[number] = line
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[number])
