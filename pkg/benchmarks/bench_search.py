#!/usr/bin/env python3
"""Benchmark: compiled search kernel versus the pure-python fallback.

Times the three searches the library actually runs per graph -- the full
identity-stabilizer search, the little-group search, and a single
orbit-representative search -- on complete transposition sets.

Usage: python benchmarks/bench_search.py [--max-n 5] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from cayleylab import search
from cayleylab.cayley import build_cayley, preset_generators


def time_call(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench(n: int, backend: str, repeat: int) -> dict:
    X = build_cayley(n, preset_generators(n, "complete"))
    adj = X.adjacency_matrix()
    part = X.distance_partition()
    lg_pins = ((0, 0),) + tuple((v, v) for v in sorted(part.layers[1]))
    rows = {}
    rows["stabilizer"] = time_call(
        lambda: search.find_automorphisms(adj, pinned=((0, 0),), backend=backend), repeat
    )
    rows["little group"] = time_call(
        lambda: search.find_automorphisms(adj, pinned=lg_pins, backend=backend), repeat
    )
    rows["orbit rep"] = time_call(
        lambda: search.find_automorphisms(adj, pinned=((0, 1),), limit=1, backend=backend), repeat
    )
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = search.available_backends()
    print(f"available backends: {', '.join(backends)}")
    header = f"{'search':<14}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    for n in range(3, args.max_n + 1):
        print(f"\nCay(S_{n}, complete), {build_cayley(n, preset_generators(n, 'complete')).vertex_count} vertices")
        print(header)
        results = {b: bench(n, b, args.repeat) for b in backends}
        for row in ("stabilizer", "little group", "orbit rep"):
            line = f"{row:<14}"
            for b in backends:
                line += f"{results[b][row] * 1e3:>10.2f}ms"
            if len(backends) == 2:
                ratio = results["python"][row] / max(results["compiled"][row], 1e-9)
                line += f"{ratio:>9.1f}x"
            print(line)


if __name__ == "__main__":
    main()
