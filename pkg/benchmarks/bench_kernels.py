#!/usr/bin/env python3
"""Benchmark the jitted oracle kernels against the pure-numpy fallbacks.

Two workloads: building min-cap tables for a batch of random decreasing
sequences, and the full pair scan of a large all-graphic class (all-graphic
so the scan cannot stop early).  Both backends are called in-process and
their outputs compared; the module-level selection (BGSEQ_NO_NUMBA) does not
matter here because the implementations are addressed explicitly.

Usage:
    python benchmarks/bench_kernels.py [--scale {small,medium,large}] [--repeat N]
"""

import argparse
import time

import numpy as np

import bgseq.kernels as kernels
from bgseq import ClassParams, count_class, theorem_main
from bgseq.enumeration import _side_matrix

SCALES = {
    # (class for the scan workload, rows/width/kmax for the caps workload)
    "small": (ClassParams(6, 1, 6, 1, 16, 16, 48), (50_000, 16, 16)),
    "medium": (ClassParams(6, 1, 6, 1, 20, 20, 60), (200_000, 20, 20)),
    "large": (ClassParams(7, 1, 7, 1, 22, 22, 77), (500_000, 22, 22)),
}


def best_of(fn, args, repeat):
    out = None
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_caps(rows, width, kmax, repeat, rng):
    mat = np.sort(rng.integers(0, 9, size=(rows, width)), axis=1)[:, ::-1]
    mat = np.ascontiguousarray(mat, dtype=np.int64)
    results = {}
    if kernels.USING_NUMBA:
        kernels.cap_sum_rows_jit(mat[:64], kmax)  # warm the jit
        results["numba"] = best_of(kernels.cap_sum_rows_jit, (mat, kmax), repeat)
    results["numpy"] = best_of(kernels.cap_sum_rows_numpy, (mat, kmax), repeat)
    return results


def bench_scan(params, repeat):
    verdict = theorem_main(params).verdict.value
    lefts = _side_matrix(params.a, params.b, params.m, params.S)
    rights = _side_matrix(params.c, params.d, params.n, params.S)
    prefix = kernels.prefix_sum_rows(lefts)
    mask = (
        kernels.boundary_mask_rows_jit(lefts)
        if kernels.USING_NUMBA
        else kernels.boundary_mask_rows_numpy(lefts)
    )
    caps = (
        kernels.cap_sum_rows_jit(rights, params.m)
        if kernels.USING_NUMBA
        else kernels.cap_sum_rows_numpy(rights, params.m)
    )
    print(
        f"scan workload: {params} -> {verdict}, "
        f"{lefts.shape[0]} x {rights.shape[0]} = {count_class(params):,} pairs"
    )
    results = {}
    if kernels.USING_NUMBA:
        kernels.scan_pairs_jit(prefix[:4], mask[:4], caps[:4], 1000)  # warm the jit
        results["numba"] = best_of(kernels.scan_pairs_jit, (prefix, mask, caps, 1000), repeat)
    results["numpy"] = best_of(kernels.scan_pairs_numpy, (prefix, mask, caps, 1000), repeat)
    return results


def report(name, results, normalize=None):
    times = {backend: t for backend, (t, _) in results.items()}
    outputs = [out for _, out in results.values()]
    if len(outputs) == 2:
        first, second = outputs
        agree = (
            np.array_equal(first, second)
            if isinstance(first, np.ndarray)
            else tuple(first) == tuple(second)
        )
        if not agree:
            raise SystemExit(f"{name}: backends disagree, refusing to report timings")
    for backend, t in times.items():
        rate = f"  ({normalize / t / 1e6:.1f} M items/s)" if normalize else ""
        print(f"  {name:<12} {backend:<6} {t * 1e3:9.2f} ms{rate}")
    if "numba" in times and "numpy" in times:
        print(f"  {name:<12} speedup numba vs numpy: {times['numpy'] / times['numba']:.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", choices=sorted(SCALES), default="medium")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not kernels.USING_NUMBA:
        print("note: numba backend unavailable or disabled; timing numpy only")

    scan_params, (rows, width, kmax) = SCALES[args.scale]
    rng = np.random.default_rng(0)

    print(f"cap-sum tables: {rows:,} sequences of width {width}, kmax {kmax}")
    report("cap tables", bench_caps(rows, width, kmax, args.repeat, rng), normalize=rows * kmax)

    results = bench_scan(scan_params, args.repeat)
    report("pair scan", results, normalize=count_class(scan_params))


if __name__ == "__main__":
    main()
