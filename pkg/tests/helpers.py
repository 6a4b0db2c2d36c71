"""Shared corpora and grid iterators for the test suite."""

from itertools import combinations_with_replacement
from typing import Iterator

import numpy as np

from bgseq import ClassParams, DegreeSequence, s_range


def grid_params(limit: int = 6, min_floor: int = 1) -> Iterator[ClassParams]:
    """Every valid ClassParams with maxima and lengths up to `limit` and
    minima at least `min_floor`, over every compatible sum."""
    for a in range(max(1, min_floor), limit + 1):
        for b in range(min_floor, a + 1):
            for n in range(a, limit + 1):
                for c in range(max(1, min_floor), limit + 1):
                    for d in range(min_floor, c + 1):
                        for m in range(c, limit + 1):
                            for S in s_range(a, b, c, d, m, n):
                                yield ClassParams(a, b, c, d, m, n, S)


def all_decreasing(max_len: int, max_val: int, min_val: int = 1) -> Iterator[tuple[int, ...]]:
    """Every non-increasing tuple with entries in [min_val, max_val] and
    length 1..max_len."""
    for length in range(1, max_len + 1):
        yield from combinations_with_replacement(range(max_val, min_val - 1, -1), length)


def _retarget_sum(y: np.ndarray, target: int, max_val: int, rng) -> np.ndarray:
    # Nudge entries (staying in [1, max_val]) until the sum hits `target`;
    # leaves y unchanged when the target is unreachable.
    y = y.astype(np.int64).copy()
    n = y.size
    if not n <= target <= n * max_val:
        return y
    diff = target - int(y.sum())
    while diff != 0:
        idx = int(rng.integers(0, n))
        if diff > 0 and y[idx] < max_val:
            step = min(diff, max_val - int(y[idx]))
            y[idx] += step
            diff -= step
        elif diff < 0 and y[idx] > 1:
            step = min(-diff, int(y[idx]) - 1)
            y[idx] -= step
            diff += step
    return y


def random_pair_corpus(count: int, seed: int, max_len: int = 50, max_val: int = 50):
    """Seeded random decreasing positive pairs; every other pair is adjusted
    to share a sum so the dominance logic actually gets exercised."""
    rng = np.random.default_rng(seed)
    pairs = []
    for trial in range(count):
        m = int(rng.integers(1, max_len + 1))
        n = int(rng.integers(1, max_len + 1))
        x = np.sort(rng.integers(1, max_val + 1, size=m))[::-1]
        y = rng.integers(1, max_val + 1, size=n)
        if trial % 2 == 0:
            y = _retarget_sum(y, int(x.sum()), max_val, rng)
        y = np.sort(y)[::-1]
        pairs.append((DegreeSequence(x.copy()), DegreeSequence(y.copy())))
    return pairs


def random_graphic_pairs(count: int, seed: int, max_side: int = 30):
    """Degree-sequence pairs of seeded random bipartite graphs; graphic by
    construction, zeros included."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        m = int(rng.integers(1, max_side + 1))
        n = int(rng.integers(1, max_side + 1))
        adj = rng.random((m, n)) < rng.uniform(0.05, 0.95)
        e = np.sort(adj.sum(axis=1).astype(np.int64))[::-1]
        f = np.sort(adj.sum(axis=0).astype(np.int64))[::-1]
        yield DegreeSequence(e.copy()), DegreeSequence(f.copy())
