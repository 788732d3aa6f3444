#!/usr/bin/env python3
"""Benchmark the compiled search kernel against the pure-Python fallback.

Runs the exact solver on a fixed instance set with both backends, checks
they return identical results (eta, witness, node counts), and prints the
timings side by side.

Usage: python3 benchmarks/bench_solver.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from dlucky import (
    available_backends,
    build_cocktail,
    build_corona,
    complete_graph,
    cycle_graph,
    exact_eta,
)


def instances():
    yield "K_5", complete_graph(5), 5
    yield "K_6", complete_graph(6), 6
    yield "C_12", cycle_graph(12), 3
    yield "corona(6,1)", build_corona(6, 1).graph, 4
    yield "corona(5,2)", build_corona(5, 2).graph, 3
    yield "corona(7,1)", build_corona(7, 1).graph, 4
    yield "cocktail(2,4,1)", build_cocktail(2, 4, 1).graph, 2


def timed(graph, max_k, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = exact_eta(graph, max_k=max_k, vertex_cap=graph.n, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled kernel not built; timing the pure kernel only\n")

    header = f"{'instance':<16} {'eta':>4} {'nodes':>10} {'pure (s)':>10}"
    if "compiled" in backends:
        header += f" {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, graph, max_k in instances():
        pure_res, pure_t = timed(graph, max_k, "pure", args.repeat)
        line = f"{name:<16} {pure_res.eta!s:>4} {pure_res.nodes_explored:>10} {pure_t:>10.4f}"
        if "compiled" in backends:
            fast_res, fast_t = timed(graph, max_k, "compiled", args.repeat)
            assert fast_res.eta == pure_res.eta, name
            assert fast_res.nodes_explored == pure_res.nodes_explored, name
            if fast_res.witness is not None:
                assert fast_res.witness.labels == pure_res.witness.labels, name
            line += f" {fast_t:>13.4f} {pure_t / fast_t:>7.1f}x"
        print(line)

    print("\nbackends agree on every instance")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
