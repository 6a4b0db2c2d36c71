"""Exhaustive class generation and the brute-force oracle.

``enum_sequences`` streams every decreasing sequence with prescribed length,
max, min and sum in reverse-lexicographic order (most spread-out first, which
is where non-graphic witnesses concentrate).  ``brute_force_all_graphic``
scans the full Cartesian product of a class with the strong-index test,
spot-validated against the full dominance test; it is the independent ground
truth the closed-form criterion is verified against, so it deliberately
shares no code path with ``theorem_main``.
"""

from __future__ import annotations

import operator
import os
from dataclasses import dataclass
from enum import Enum
from functools import cache, lru_cache
from typing import Iterator, NamedTuple

import numpy as np

from . import kernels
from .galeryser import gale_ryser, zz_check
from .seqcore import MAX_INPUT, ClassParams, DegreeSequence, LimitExceeded

__all__ = [
    "OracleBudgetExceeded",
    "OracleVerdict",
    "WitnessPair",
    "ClassWitness",
    "DEFAULT_ORACLE_BUDGET",
    "BUDGET_ENV",
    "SPOT_STRIDE",
    "enum_sequences",
    "enum_class",
    "count_class",
    "brute_force_all_graphic",
    "oracle_budget",
]

DEFAULT_ORACLE_BUDGET = 10**7
BUDGET_ENV = "BGSEQ_ORACLE_BUDGET"

# Every 1000th scanned pair is re-tested with the full dominance check.
SPOT_STRIDE = 1000


class OracleBudgetExceeded(RuntimeError):
    """The class is larger than the configured oracle budget."""


class OracleVerdict(Enum):
    ALL_GRAPHIC = "all-graphic"
    FOUND_NON_GRAPHIC = "found-non-graphic"
    EMPTY = "empty"


class WitnessPair(NamedTuple):
    left: DegreeSequence
    right: DegreeSequence
    failing_k: int


@dataclass(frozen=True)
class ClassWitness:
    """Oracle outcome: either every pair passed, or the first failing pair in
    enumeration order together with a violated index, or the class is empty."""

    verdict: OracleVerdict
    witness: WitnessPair | None = None


def _check_side_args(A: int, B: int, L: int, S: int) -> tuple[int, int, int, int]:
    A, B, L, S = (operator.index(v) for v in (A, B, L, S))
    if B < 0:
        raise ValueError("requires B >= 0")
    if A < B:
        raise ValueError("requires A >= B")
    if L < 1:
        raise ValueError("requires L >= 1")
    if max(A, L, S if S > 0 else 0) > MAX_INPUT:
        raise LimitExceeded(f"arguments must not exceed {MAX_INPUT}")
    return A, B, L, S


def _walk(A: int, B: int, L: int, S: int) -> Iterator[tuple[int, ...]]:
    # Decreasing length-L sequences with first entry A, last entry B, sum S,
    # emitted in reverse-lexicographic order.  Bounds are exact, so every
    # branch taken completes to at least one sequence.
    if L == 1:
        if A == B == S:
            yield (A,)
        return
    mid = L - 2
    target = S - A - B
    if target < B * mid or target > A * mid:
        return
    if mid == 0:
        yield (A, B)
        return
    buf = [0] * mid

    def rec(i: int, rem: int) -> Iterator[tuple[int, ...]]:
        if i == mid:
            yield (A, *buf, B)
            return
        slots = mid - i
        prev = buf[i - 1] if i else A
        hi = min(prev, rem - B * (slots - 1))
        lo = max(B, -(-rem // slots))
        for v in range(hi, lo - 1, -1):
            buf[i] = v
            yield from rec(i + 1, rem - v)

    yield from rec(0, target)


def enum_sequences(A: int, B: int, L: int, S: int) -> Iterator[DegreeSequence]:
    """Stream each decreasing length-L sequence with max A, min B and sum S
    exactly once, in reverse-lexicographic order."""
    A, B, L, S = _check_side_args(A, B, L, S)
    for row in _walk(A, B, L, S):
        yield DegreeSequence._from_trusted(np.array(row, dtype=np.int64))


def enum_class(params: ClassParams) -> Iterator[tuple[DegreeSequence, DegreeSequence]]:
    """Stream the Cartesian product of the two sides of the class, left-major.

    The right side is materialized once; the left side is streamed.
    """
    rights = list(enum_sequences(params.c, params.d, params.n, params.S))
    if not rights:
        return
    for e in enum_sequences(params.a, params.b, params.m, params.S):
        for f in rights:
            yield (e, f)


@cache
def _bounded_partition_count(total: int, parts: int, limit: int) -> int:
    # Partitions of `total` into at most `parts` parts, each in [1, limit].
    if total == 0:
        return 1
    if total < 0 or parts == 0 or limit == 0 or total > parts * limit:
        return 0
    return _bounded_partition_count(total, parts, limit - 1) + _bounded_partition_count(
        total - limit, parts - 1, limit
    )


def _count_side(A: int, B: int, L: int, S: int) -> int:
    if L == 1:
        return 1 if A == B == S else 0
    if A < B:
        return 0
    # Fixed first entry A and last entry B; shift the L-2 middle entries down
    # by B and count bounded partitions of what remains.
    shifted = S - A - B - (L - 2) * B
    return _bounded_partition_count(shifted, L - 2, A - B) if shifted >= 0 else 0


def count_class(params: ClassParams) -> int:
    """Exact size of the class, |left side| * |right side|, without
    enumerating anything."""
    left = _count_side(params.a, params.b, params.m, params.S)
    if left == 0:
        return 0
    return left * _count_side(params.c, params.d, params.n, params.S)


@lru_cache(maxsize=4096)
def _side_matrix(A: int, B: int, L: int, S: int) -> np.ndarray:
    rows = list(_walk(A, B, L, S))
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), L)
    assert arr.shape[0] == _count_side(A, B, L, S)
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=4096)
def _left_tables(A: int, B: int, L: int, S: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    seqs = _side_matrix(A, B, L, S)
    prefix = kernels.prefix_sum_rows(seqs)
    mask = kernels.boundary_mask_rows(seqs)
    prefix.setflags(write=False)
    mask.setflags(write=False)
    return seqs, prefix, mask


@lru_cache(maxsize=32768)
def _right_caps(A: int, B: int, L: int, S: int, kmax: int) -> np.ndarray:
    caps = kernels.cap_sum_rows(_side_matrix(A, B, L, S), kmax)
    caps.setflags(write=False)
    return caps


def oracle_budget() -> int:
    """Pair budget for oracle runs; overridable via BGSEQ_ORACLE_BUDGET."""
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_ORACLE_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def brute_force_all_graphic(params: ClassParams, budget: int | None = None) -> ClassWitness:
    """Definitional check of the class: test every pair.

    Scans the Cartesian product in enumeration order with the strong-index
    kernel, spot-validating a deterministic 1-in-1000 subsample against the
    full dominance test.  Refuses classes above the pair budget.
    """
    size = count_class(params)
    limit = oracle_budget() if budget is None else operator.index(budget)
    if size > limit:
        raise OracleBudgetExceeded(
            f"class holds {size} pairs, above the oracle budget {limit}; "
            f"set {BUDGET_ENV} or pass an explicit budget to override"
        )
    if size == 0:
        return ClassWitness(OracleVerdict.EMPTY)
    _, prefix, mask = _left_tables(params.a, params.b, params.m, params.S)
    caps = _right_caps(params.c, params.d, params.n, params.S, params.m)
    i, j, k, disagreements = kernels.scan_pairs(prefix, mask, caps, SPOT_STRIDE)
    if disagreements:
        raise RuntimeError(
            "strong-index test disagreed with the full dominance test "
            f"{disagreements} time(s) on {params}; this is a bug"
        )
    if i < 0:
        return ClassWitness(OracleVerdict.ALL_GRAPHIC)
    lefts = _side_matrix(params.a, params.b, params.m, params.S)
    rights = _side_matrix(params.c, params.d, params.n, params.S)
    left = DegreeSequence._from_trusted(lefts[i])
    right = DegreeSequence._from_trusted(rights[j])
    # Self-certification: the witness must fail the scalar tests the same way.
    scalar = zz_check(left, right)
    assert not scalar.graphic and scalar.failing_k == k
    assert not gale_ryser(left, right).graphic
    return ClassWitness(OracleVerdict.FOUND_NON_GRAPHIC, WitnessPair(left, right, k))
