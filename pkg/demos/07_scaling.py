"""Doubling n and watching the clock.

The adaptive algorithm should roughly double its time when n doubles; the
all-pairs scan should roughly quadruple.
"""

from permstat import benchmark

for alg, ns in (("adaptive", [2**k for k in range(13, 18)]),
                ("banded", [2**k for k in range(13, 18)]),
                ("naive", [2**k for k in range(9, 12)])):
    for row in benchmark(ns, [alg], seed=1, reps=5):
        ratio = "" if row.doubling_ratio is None else f"x{row.doubling_ratio:.2f}"
        print(f"{alg:>8}  n = {row.n:>6}  {row.median_seconds * 1e6:>9.1f} us  {ratio}")
