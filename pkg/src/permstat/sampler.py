"""Reproducible uniform sampling from S_n.

The generator is xoshiro256** seeded through SplitMix64.  Substream ``k`` of
a seed is the base state advanced by ``k`` applications of the xoshiro jump
polynomial (2**128 steps each), so substreams never overlap in practice.
Bounded draws use Lemire's multiply-shift with rejection and are exactly
uniform; permutations come from a Fisher-Yates pass over the identity.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .perm import Permutation

ALGORITHM_ID = "xoshiro256**/splitmix64-seed/lemire32/fisher-yates"

_MASK64 = (1 << 64) - 1


def splitmix64_words(seed: int, count: int = 4) -> list[int]:
    x = seed & _MASK64
    out = []
    for _ in range(count):
        x = (x + 0x9E3779B97F4A7C15) & _MASK64
        z = x
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        out.append(z ^ (z >> 31))
    return out


def base_state(seed: int) -> np.ndarray:
    if not 0 <= seed <= _MASK64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return np.array(splitmix64_words(seed), dtype=np.uint64)


def stream_states(seed: int, count: int) -> list[np.ndarray]:
    """States for substreams 0..count-1 of ``seed``, computed by chained jumps."""
    state = base_state(seed)
    states = []
    for _ in range(count):
        states.append(state.copy())
        _kernels.jump(state)
    return states


class SeededGenerator:
    """A single-owner pseudorandom stream identified by (seed, stream_index).

    Do not share one instance between threads; give each worker its own
    ``stream_index`` instead.
    """

    algorithm_id = ALGORITHM_ID

    def __init__(self, seed: int, stream_index: int = 0):
        if stream_index < 0:
            raise ValueError("stream_index must be non-negative")
        self.seed = seed
        self.stream_index = stream_index
        state = base_state(seed)
        for _ in range(stream_index):
            _kernels.jump(state)
        self.state = state

    @classmethod
    def from_state(cls, state: np.ndarray, seed: int, stream_index: int) -> "SeededGenerator":
        gen = cls.__new__(cls)
        gen.seed = seed
        gen.stream_index = stream_index
        gen.state = np.asarray(state, dtype=np.uint64).copy()
        return gen

    def next_u64(self) -> int:
        return int(_kernels.next_u64(self.state))

    def bounded(self, bound: int) -> int:
        """Uniform integer in [0, bound), ``1 <= bound < 2**32``."""
        if not 1 <= bound < 1 << 32:
            raise ValueError(f"bound must lie in [1, 2**32), got {bound}")
        return int(_kernels.bounded(self.state, bound))

    def metadata(self) -> dict:
        return {"algorithm_id": self.algorithm_id, "seed": self.seed,
                "stream_index": self.stream_index}

    def __repr__(self) -> str:
        return f"SeededGenerator(seed={self.seed}, stream_index={self.stream_index})"


def sample_array(n: int, gen: SeededGenerator) -> np.ndarray:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n >= 1 << 32:
        raise ValueError("n too large for 32-bit bounded draws")
    out = np.empty(n, dtype=np.int64)
    _kernels.shuffle_identity(gen.state, out)
    return out


def sample_permutation(n: int, gen: SeededGenerator) -> Permutation:
    """Uniformly random permutation of [n]; advances ``gen``."""
    return Permutation(sample_array(n, gen), check=False)
