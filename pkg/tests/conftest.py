"""Shared test helpers: random inputs and independent brute-force oracles.

The oracles here recompute everything from the definitions with naive loops
and never call the code paths they are used to check.
"""

from __future__ import annotations

import itertools
import random

from dlucky import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def oracle_d_sum(g: Graph, labels, u: int) -> int:
    # definition, written independently of the package's sum code
    total = 0
    degree = 0
    for a, b in g.edges:
        if a == u:
            total += labels[b]
            degree += 1
        elif b == u:
            total += labels[a]
            degree += 1
    return degree + total


def oracle_is_d_lucky(g: Graph, labels) -> bool:
    for u, v in g.edges:
        if oracle_d_sum(g, labels, u) == oracle_d_sum(g, labels, v):
            return False
    return True


def oracle_exists_labeling(g: Graph, k: int):
    """First valid assignment in plain lexicographic vertex-index order, or None."""
    for assignment in itertools.product(range(1, k + 1), repeat=g.n):
        if oracle_is_d_lucky(g, assignment):
            return assignment
    return None


def oracle_eta(g: Graph, max_k: int):
    for k in range(1, max_k + 1):
        if oracle_exists_labeling(g, k) is not None:
            return k
    return None


def oracle_maximum_cliques(g: Graph):
    """All maximum cliques by scanning every vertex subset, largest first."""
    for size in range(g.n, 0, -1):
        found = [
            combo
            for combo in itertools.combinations(range(g.n), size)
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2))
        ]
        if found:
            return sorted(found)
    return []


def connected_graphs(max_n: int):
    """Every connected labeled graph on 1..max_n vertices."""
    from dlucky import is_connected

    for nv in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(nv), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = Graph(nv, edges)
            if is_connected(g):
                yield g
