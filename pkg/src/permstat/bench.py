"""Wall-clock scaling of the three minimum-distance algorithms."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from . import _kernels
from .errors import BudgetExceeded
from .perm import breadth_band_limit
from .sampler import SeededGenerator, sample_array

ALGORITHMS = ("naive", "banded", "adaptive")
MIN_TIMED_NS = 2_000_000  # repeat a call until one measurement spans 2 ms
WINDOWS = 9  # best of this many measurements; scheduler noise only adds time
DEFAULT_MAX_NAIVE_N = 1 << 15
DEFAULT_MAX_N = 1 << 22


@dataclass
class BenchRow:
    algorithm: str
    n: int
    reps: int
    median_seconds: float
    doubling_ratio: float | None = None


def _call(algorithm: str, arr, window: int) -> int:
    if algorithm == "naive":
        return _kernels.min_distance_naive(arr)
    if algorithm == "banded":
        return _kernels.min_distance_banded(arr, window)
    return _kernels.min_distance_adaptive(arr)


def _calibrate(algorithm: str, arr, window: int) -> tuple[int, int]:
    """Batch size whose run time spans 2 ms, and the time of that batch."""
    _call(algorithm, arr, window)
    loops = 1
    while True:
        elapsed = _batch(algorithm, arr, window, loops)
        if elapsed >= MIN_TIMED_NS:
            return loops, elapsed
        loops = max(2 * loops, int(1.2 * loops * MIN_TIMED_NS / max(elapsed, 1)))


def _batch(algorithm: str, arr, window: int, loops: int) -> int:
    start = time.perf_counter_ns()
    for _ in range(loops):
        _call(algorithm, arr, window)
    return time.perf_counter_ns() - start


def time_call(algorithm: str, arr, windows: int = WINDOWS) -> float:
    """Seconds per call: calls are batched until a batch spans 2 ms, and the
    fastest of ``windows`` batches is kept."""
    window = breadth_band_limit(arr.shape[0]) + 1
    loops, best = _calibrate(algorithm, arr, window)
    for _ in range(windows - 1):
        best = min(best, _batch(algorithm, arr, window, loops))
    return best / loops / 1e9


def _warm_up() -> None:
    gen = SeededGenerator(0)
    arr = sample_array(16, gen)
    for algorithm in ALGORITHMS:
        _call(algorithm, arr, breadth_band_limit(16) + 1)


def benchmark(n_list, algorithms=ALGORITHMS, seed: int = 0, reps: int = 5,
              max_naive_n: int = DEFAULT_MAX_NAIVE_N,
              max_n: int = DEFAULT_MAX_N) -> list[BenchRow]:
    """Median seconds per call over ``reps`` random permutations for each n.

    Rep r uses substream r of ``seed``, so every algorithm sees the same
    inputs.  Each (n, rep) time is the best of several 2 ms batches.
    ``doubling_ratio`` is time(n) / time(previous n) and is only filled when
    the previous n is exactly half.
    """
    if reps < 1:
        raise ValueError("reps must be positive")
    for alg in algorithms:
        if alg not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {alg!r}")
    for n in n_list:
        if n < 2:
            raise ValueError(f"n must be at least 2, got {n}")
        if n > max_n:
            raise BudgetExceeded("bench n", n, max_n)
        if "naive" in algorithms and n > max_naive_n:
            raise BudgetExceeded("naive bench n", n, max_naive_n)
    _warm_up()
    inputs = {(n, r): sample_array(n, SeededGenerator(seed, r))
              for n in n_list for r in range(reps)}
    rows = []
    for alg in algorithms:
        # windows are spread round-robin over all inputs, so a slow spell on
        # the machine cannot land on every measurement of a single n
        plan = {}
        for key, arr in inputs.items():
            window = breadth_band_limit(key[0]) + 1
            loops, elapsed = _calibrate(alg, arr, window)
            plan[key] = [window, loops, elapsed]
        for _ in range(WINDOWS - 1):
            for r in range(reps):
                for n in n_list:
                    window, loops, best = plan[(n, r)]
                    plan[(n, r)][2] = min(best, _batch(alg, inputs[(n, r)], window, loops))
        prev = None
        for n in n_list:
            med = statistics.median(plan[(n, r)][2] / plan[(n, r)][1] / 1e9
                                    for r in range(reps))
            ratio = None
            if prev is not None and prev[0] * 2 == n:
                ratio = med / prev[1]
            rows.append(BenchRow(alg, n, reps, med, ratio))
            prev = (n, med)
    return rows
