"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each row runs the same workload on both backends and checks they agree.
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from bookgraph import _kernels
from bookgraph.graph import Graph
from bookgraph.search import SearchParams, count_classes


def _graphs(seed, count, n, p):
    rng = random.Random(seed)
    return [
        Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]).masks
        for _ in range(count)
    ]


def _workloads():
    dense = _graphs(1, 200, 40, 0.5)
    small = _graphs(2, 2000, 10, 0.5)
    seeds = np.random.default_rng(0).integers(0, 2**64, size=200_000, dtype=np.uint64)
    start = _graphs(3, 1, 12, 0.5)[0]
    return [
        ("triangle_count, 200 graphs n=40", lambda: [_kernels.triangle_count(g) for g in dense]),
        ("pivot_cut_sizes, 200 graphs n=40", lambda: [tuple(_kernels.pivot_cut_sizes(g)) for g in dense]),
        ("canonical_label, 2000 graphs n=10", lambda: [tuple(_kernels.canonical_label(g)[1]) for g in small]),
        ("enumerate all graphs n=7", lambda: count_classes(
            SearchParams(n=7, edge_threshold_mode="any", exclude_balanced_bipartite=False))),
        ("verify n=9 b=2 (filtered tree)", lambda: count_classes(SearchParams(n=9, b_cap=2))),
        ("descend 100k swaps n=12", lambda: _kernels.descend(start, 2, seeds)[:1]),
    ]


def _time(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if "cython" not in _kernels.AVAILABLE:
        print("compiled kernels not built; run `python3 setup.py build_ext --inplace` first")
        return 1
    print(f"{'workload':40s} {'cython s':>10s} {'python s':>10s} {'speedup':>8s}")
    for name, fn in _workloads():
        _kernels.set_backend("cython")
        tc, oc = _time(fn, args.repeat)
        _kernels.set_backend("python")
        tp, op = _time(fn, 1)
        _kernels.set_backend("cython")
        if oc != op:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:40s} {tc:10.4f} {tp:10.4f} {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
