#!/usr/bin/env python3
"""Benchmark: compiled diagonal kernel vs. the pure-Python fallback.

Two workloads:

* table — building the diagonal table ξ(e_n⊗Δ^k) from scratch for all
  n ≤ k ≤ K (the recursion with memoization),
* pushforward — relabeling a large table entry along many order-preserving
  injections (the hot path of naturality and of evaluating ξ on spaces).

Both kernels are imported directly, so a single run compares them in one
process regardless of which one the package selected.
"""

from __future__ import annotations

import sys
import time
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from steenrod_kit import _xi_py  # noqa: E402

try:
    from steenrod_kit import _xi_fast
except ImportError:
    _xi_fast = None


def bench_table(kernel, K: int) -> float:
    start = time.perf_counter()
    cache: dict = {}
    for k in range(K + 1):
        for n in range(k + 1):
            kernel.xi_standard(n, k, cache)
    return time.perf_counter() - start


def bench_pushforward(kernel, repeats: int) -> float:
    cache: dict = {}
    entries = kernel.xi_standard(3, 7, cache)
    injections = [c for c in combinations(range(12), 8)]
    start = time.perf_counter()
    done = 0
    while done < repeats:
        for injection in injections:
            kernel.pushforward(entries, injection)
            done += 1
            if done >= repeats:
                break
    return time.perf_counter() - start


def main() -> None:
    K = 8
    repeats = 2000
    rows = []
    for label, kernel in (("pure-python", _xi_py), ("compiled", _xi_fast)):
        if kernel is None:
            rows.append((label, None, None))
            continue
        rows.append((label, bench_table(kernel, K), bench_pushforward(kernel, repeats)))
    print(f"workloads: table build n ≤ k ≤ {K}; {repeats} pushforwards of xi(e3⊗Δ⁷)")
    print(f"{'kernel':14s} {'table (s)':>12s} {'pushforward (s)':>18s}")
    for label, t_table, t_push in rows:
        if t_table is None:
            print(f"{label:14s} {'unavailable':>12s} {'unavailable':>18s}")
        else:
            print(f"{label:14s} {t_table:12.3f} {t_push:18.3f}")
    if rows[1][1] is not None:
        print(
            f"speedup: table ×{rows[0][1] / rows[1][1]:.1f}, "
            f"pushforward ×{rows[0][2] / rows[1][2]:.1f}"
        )


if __name__ == "__main__":
    main()
