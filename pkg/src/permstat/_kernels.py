"""Compiled inner loops shared by the public modules.

Everything here works on plain numpy arrays: permutations are int64 arrays of
1-based values, generator state is a uint64 array of length 4 (xoshiro256**).
The public wrappers validate inputs; these functions do not.
"""

import numba as nb
import numpy as np

_U64 = np.uint64
_ONE = np.uint64(1)
_MASK32 = np.uint64(0xFFFFFFFF)
_SHIFT32 = np.uint64(32)
_TWO32 = np.uint64(1 << 32)

JUMP = np.array(
    [0x180EC6D33CFD0ABA, 0xD5A61266F0C9392C, 0xA9582618E03FC9AA, 0x39ABDC4529B1661C],
    dtype=np.uint64,
)


# -- xoshiro256** ---------------------------------------------------------


@nb.njit(inline="always")
def _rotl(x, k):
    return (x << k) | (x >> (_U64(64) - k))


@nb.njit(cache=True)
def next_u64(s):
    s0 = s[0]
    s1 = s[1]
    s2 = s[2]
    s3 = s[3]
    result = _rotl(s1 * _U64(5), _U64(7)) * _U64(9)
    t = s1 << _U64(17)
    s2 ^= s0
    s3 ^= s1
    s1 ^= s2
    s0 ^= s3
    s2 ^= t
    s3 = _rotl(s3, _U64(45))
    s[0] = s0
    s[1] = s1
    s[2] = s2
    s[3] = s3
    return result


@nb.njit(cache=True)
def jump(s):
    """Advance ``s`` by 2**128 steps in place."""
    t0 = _U64(0)
    t1 = _U64(0)
    t2 = _U64(0)
    t3 = _U64(0)
    for w in range(4):
        word = JUMP[w]
        for b in range(64):
            if (word >> _U64(b)) & _ONE:
                t0 ^= s[0]
                t1 ^= s[1]
                t2 ^= s[2]
                t3 ^= s[3]
            next_u64(s)
    s[0] = t0
    s[1] = t1
    s[2] = t2
    s[3] = t3


@nb.njit(cache=True)
def bounded(s, bound):
    """Uniform integer in ``[0, bound)`` for ``1 <= bound < 2**32``.

    Lemire's multiply-shift on the top 32 bits of a draw, with rejection of
    the short residue class so the result is exactly uniform.
    """
    b = _U64(bound)
    m = (next_u64(s) >> _SHIFT32) * b
    low = m & _MASK32
    if low < b:
        threshold = (_TWO32 - b) % b
        while low < threshold:
            m = (next_u64(s) >> _SHIFT32) * b
            low = m & _MASK32
    return np.int64(m >> _SHIFT32)


@nb.njit(cache=True)
def shuffle_identity(s, out):
    """Fill ``out`` with a uniform permutation of 1..len(out) (Fisher-Yates)."""
    n = out.shape[0]
    for i in range(n):
        out[i] = i + 1
    for i in range(n - 1, 0, -1):
        j = bounded(s, i + 1)
        tmp = out[i]
        out[i] = out[j]
        out[j] = tmp


# -- statistics -------------------------------------------------------------


@nb.njit(cache=True)
def band_limit(n):
    # largest y >= 0 with y^2/2 + 2y + 1 <= n, i.e. y^2 + 4y + 2 <= 2n
    y = 0
    while (y + 1) * (y + 1) + 4 * (y + 1) + 2 <= 2 * n:
        y += 1
    return y


@nb.njit(cache=True)
def min_jump(a):
    n = a.shape[0]
    best = n
    for i in range(n - 1):
        diff = abs(a[i + 1] - a[i])
        if diff < best:
            best = diff
    return best


@nb.njit(cache=True)
def min_distance_naive(a):
    n = a.shape[0]
    best = 2 * n
    for i in range(n - 1):
        ai = a[i]
        for j in range(i + 1, n):
            dist = (j - i) + abs(a[j] - ai)
            if dist < best:
                best = dist
    return best


@nb.njit(cache=True)
def min_distance_banded(a, w):
    n = a.shape[0]
    best = 2 * n
    for i in range(n - 1):
        ai = a[i]
        stop = min(n, i + w + 1)
        for j in range(i + 1, stop):
            dist = (j - i) + abs(a[j] - ai)
            if dist < best:
                best = dist
    return best


@nb.njit(cache=True)
def adaptive_window(n, mj):
    w = band_limit(n) + 1
    if mj < w:
        w = mj
    if w < 1:
        w = 1
    return w


@nb.njit(cache=True)
def min_distance_adaptive(a):
    n = a.shape[0]
    mj = min_jump(a)
    return min_distance_banded(a, adaptive_window(n, mj))


@nb.njit(cache=True)
def starter_count(a, d):
    """Number of indices i that begin a close pair (distance <= d + 1)."""
    n = a.shape[0]
    count = 0
    for i in range(n - 1):
        ai = a[i]
        # a partner at gap g needs |value gap| <= d + 1 - g, so g <= d
        stop = min(n, i + d + 1)
        for j in range(i + 1, stop):
            if (j - i) + abs(a[j] - ai) <= d + 1:
                count += 1
                break
    return count


# -- Monte Carlo ------------------------------------------------------------


@nb.njit(cache=True, nogil=True)
def run_block(s, n, count, use_naive, d_probe, hist_d, hist_mj, hist_cp):
    """Sample ``count`` permutations and accumulate histograms in place.

    ``hist_cp`` is only touched when ``d_probe >= 0``.
    """
    a = np.empty(n, dtype=np.int64)
    for _ in range(count):
        shuffle_identity(s, a)
        mj = min_jump(a)
        if use_naive:
            dist = min_distance_naive(a)
        else:
            dist = min_distance_banded(a, adaptive_window(n, mj))
        hist_d[dist] += 1
        hist_mj[mj] += 1
        if d_probe >= 0:
            hist_cp[starter_count(a, d_probe)] += 1


# -- exhaustive enumeration --------------------------------------------------


@nb.njit(cache=True)
def _next_permutation(a):
    n = a.shape[0]
    i = n - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]
    a[i] = a[j]
    a[j] = tmp
    lo = i + 1
    hi = n - 1
    while lo < hi:
        tmp = a[lo]
        a[lo] = a[hi]
        a[hi] = tmp
        lo += 1
        hi -= 1
    return True


@nb.njit(cache=True)
def enumerate_all(n, d):
    """Walk all of S_n in lexicographic order.

    Returns (breadth histogram, min-jump histogram, close-pair-count
    histogram, jump-indicator mask counts, starter mask counts).  Masks use
    bit i-1 for index i in [n-1]; indicators are taken at threshold ``d``.
    Breadth is computed by the quadratic scan on purpose, so the oracle does
    not share a code path with the fast algorithms.
    """
    a = np.arange(1, n + 1).astype(np.int64)
    hist_d = np.zeros(2 * n + 1, dtype=np.int64)
    hist_mj = np.zeros(n + 1, dtype=np.int64)
    hist_pairs = np.zeros(n * (n - 1) // 2 + 1, dtype=np.int64)
    jump_masks = np.zeros(1 << (n - 1), dtype=np.int64)
    start_masks = np.zeros(1 << (n - 1), dtype=np.int64)
    while True:
        best = 2 * n
        pairs = 0
        smask = 0
        for i in range(n - 1):
            for j in range(i + 1, n):
                dist = (j - i) + abs(a[j] - a[i])
                if dist < best:
                    best = dist
                if dist <= d + 1:
                    pairs += 1
                    smask |= 1 << i
        mj = n
        jmask = 0
        for i in range(n - 1):
            diff = abs(a[i + 1] - a[i])
            if diff < mj:
                mj = diff
            if diff <= d:
                jmask |= 1 << i
        hist_d[best] += 1
        hist_mj[mj] += 1
        hist_pairs[pairs] += 1
        jump_masks[jmask] += 1
        start_masks[smask] += 1
        if not _next_permutation(a):
            break
    return hist_d, hist_mj, hist_pairs, jump_masks, start_masks
