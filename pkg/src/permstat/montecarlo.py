"""Seeded Monte Carlo campaigns over uniform permutations.

Trials are cut into fixed-size blocks; block b always draws from substream b
of the master seed, whichever worker runs it.  Worker histograms are merged
by integer addition at the end, so a report depends on the seed and the
block size only, never on thread count or scheduling.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import stats

from . import _kernels
from .asymptotics import floor_value, limit_pmf, limit_tail
from .errors import BudgetExceeded
from .sampler import ALGORITHM_ID, stream_states

DEFAULT_BLOCK_SIZE = 10_000
DEFAULT_MAX_WORK = 10**10  # n * trials
NORMAL_MIN_EXPECTED = 10.0


@dataclass(frozen=True)
class TrialConfig:
    n: int
    trials: int
    seed: int = 0
    workers: int = 1
    d_probe: int | None = None
    engine: str = "adaptive"
    block_size: int = DEFAULT_BLOCK_SIZE
    max_work: int = DEFAULT_MAX_WORK

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        if self.engine not in ("adaptive", "naive"):
            raise ValueError(f"engine must be 'adaptive' or 'naive', got {self.engine!r}")
        if self.block_size < 1:
            raise ValueError("block_size must be positive")
        if self.d_probe is not None and self.d_probe < 0:
            raise ValueError("d_probe must be non-negative")

    @property
    def blocks(self) -> int:
        return -(-self.trials // self.block_size)


@dataclass
class BucketComparison:
    value: int
    observed: int
    expected: float
    z: float
    method: str  # "normal" or "binomial" (mid-p, mapped to a z-equivalent)
    p_value: float | None = None


@dataclass
class Comparison:
    kind: str
    trials: int
    rows: list[BucketComparison]

    @property
    def max_abs_z(self) -> float:
        return max((abs(r.z) for r in self.rows), default=0.0)


@dataclass
class TrialReport:
    config: TrialConfig
    generator: dict
    breadth_histogram: dict[int, int]
    minjump_histogram: dict[int, int]
    closepair_histogram: dict[int, int] | None = None
    wall_time: dict[str, float] = field(default_factory=dict)

    @property
    def closepair_mean(self) -> float | None:
        h = self.closepair_histogram
        if h is None:
            return None
        return sum(k * c for k, c in h.items()) / self.config.trials

    @property
    def closepair_variance(self) -> float | None:
        """Unbiased sample variance of the starter count."""
        h = self.closepair_histogram
        if h is None or self.config.trials < 2:
            return None
        mean = self.closepair_mean
        ss = sum(c * (k - mean) ** 2 for k, c in h.items())
        return ss / (self.config.trials - 1)

    @property
    def prediction(self) -> dict[str, Comparison]:
        return {"breadth": compare_with_prediction(self, "breadth"),
                "minjump": compare_with_prediction(self, "minjump")}

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "config": asdict(self.config),
            "generator": dict(self.generator),
            "breadth_histogram": {str(k): v for k, v in sorted(self.breadth_histogram.items())},
            "minjump_histogram": {str(k): v for k, v in sorted(self.minjump_histogram.items())},
        }
        if self.closepair_histogram is not None:
            out["closepair_histogram"] = {str(k): v for k, v in
                                          sorted(self.closepair_histogram.items())}
            out["closepair_mean"] = self.closepair_mean
            out["closepair_variance"] = self.closepair_variance
        out["prediction"] = {
            kind: {"max_abs_z": comp.max_abs_z, "rows": [asdict(r) for r in comp.rows]}
            for kind, comp in self.prediction.items()}
        if include_timing:
            out["wall_time"] = dict(self.wall_time)
        return out


def _run_blocks(config: TrialConfig, blocks: list[tuple[int, np.ndarray]]):
    n = config.n
    hist_d = np.zeros(2 * n + 1, dtype=np.int64)
    hist_mj = np.zeros(n + 1, dtype=np.int64)
    hist_cp = np.zeros(n + 1, dtype=np.int64)
    d_probe = -1 if config.d_probe is None else config.d_probe
    for count, state in blocks:
        _kernels.run_block(state, n, count, config.engine == "naive", d_probe,
                           hist_d, hist_mj, hist_cp)
    return hist_d, hist_mj, hist_cp


def _as_dict(hist: np.ndarray) -> dict[int, int]:
    return {int(v): int(c) for v, c in enumerate(hist) if c}


def run_trials(config: TrialConfig) -> TrialReport:
    """Sample ``config.trials`` permutations and histogram d(pi) and mj(pi)."""
    work = config.n * config.trials
    if work > config.max_work:
        raise BudgetExceeded("n * trials", work, config.max_work)
    states = stream_states(config.seed, config.blocks)
    jobs = []
    for b, state in enumerate(states):
        count = min(config.block_size, config.trials - b * config.block_size)
        jobs.append((count, state))
    assignments = [jobs[w::config.workers] for w in range(config.workers)]

    start = time.perf_counter()
    if config.workers == 1:
        parts = [_run_blocks(config, assignments[0])]
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            parts = list(pool.map(lambda a: _run_blocks(config, a), assignments))
    elapsed = time.perf_counter() - start

    hist_d, hist_mj, hist_cp = (sum(arrs) for arrs in zip(*parts))
    return TrialReport(
        config=config,
        generator={"algorithm_id": ALGORITHM_ID, "seed": config.seed,
                   "streams": config.blocks, "stream_unit": "block",
                   "block_size": config.block_size},
        breadth_histogram=_as_dict(hist_d),
        minjump_histogram=_as_dict(hist_mj),
        closepair_histogram=None if config.d_probe is None else _as_dict(hist_cp),
        wall_time={config.engine: elapsed},
    )


def bucket_z(observed: int, trials: int, p: float) -> BucketComparison:
    """Standardised deviation of one bucket count from Binomial(trials, p).

    Normal approximation when the expected count is at least 10; otherwise
    the exact binomial mid-p value P[X < obs] + P[X = obs] / 2 is mapped
    through the normal quantile, so a typical count still gives z near 0.
    """
    expected = trials * p
    if expected >= NORMAL_MIN_EXPECTED:
        sd = math.sqrt(trials * p * (1 - p))
        return BucketComparison(0, observed, expected, (observed - expected) / sd, "normal")
    if p <= 0:
        z = 0.0 if observed == 0 else math.inf
        return BucketComparison(0, observed, expected, z, "binomial", 1.0 if observed == 0 else 0.0)
    dist = stats.binom(trials, p)
    mid = dist.cdf(observed - 1) + 0.5 * dist.pmf(observed) if observed > 0 \
        else 0.5 * dist.pmf(0)
    mid = min(max(mid, 1e-300), 1 - 1e-16)
    z = float(stats.norm.ppf(mid))
    two_sided = float(min(1.0, 2 * min(mid, 1 - mid)))
    return BucketComparison(0, observed, expected, z, "binomial", two_sided)


def compare_counts(observed: dict[int, int], probabilities: dict[int, float],
                   trials: int, kind: str = "") -> Comparison:
    rows = []
    for v in sorted(probabilities):
        row = bucket_z(observed.get(v, 0), trials, probabilities[v])
        row.value = v
        rows.append(row)
    return Comparison(kind, trials, rows)


def compare_with_prediction(report: TrialReport, kind: str = "breadth",
                            max_value: int | None = None) -> Comparison:
    """Observed histogram against the limit law, bucket by bucket."""
    hist = report.breadth_histogram if kind == "breadth" else report.minjump_histogram
    lo = floor_value(kind)
    hi = max(max(hist), lo + 3) if max_value is None else max_value
    probs = {v: limit_pmf(kind, v) for v in range(lo, hi + 1)}
    return compare_counts(hist, probs, report.config.trials, kind)


def tail_deviation(report: TrialReport, kind: str, threshold: int) -> float:
    """(observed tail fraction - limit tail) in units of its standard error."""
    hist = report.breadth_histogram if kind == "breadth" else report.minjump_histogram
    trials = report.config.trials
    obs = sum(c for v, c in hist.items() if v >= threshold) / trials
    p = limit_tail(kind, threshold)
    se = math.sqrt(p * (1 - p) / trials)
    return (obs - p) / se if se else (0.0 if obs == p else math.inf)
