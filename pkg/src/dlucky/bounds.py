"""Maximum-clique enumeration and the clique-degree lower bound.

For a clique Q of a connected graph G with clique number w, every d-lucky
labeling forces at least ``ceil((2*delta(Q) - Delta(Q) + 1) / (Delta(Q) - w + 2))``
labels, where delta/Delta are the smallest and largest G-degrees over Q.
The bound is evaluated over all largest cliques and clamped below at 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, is_connected


@dataclass(frozen=True)
class CliqueRecord:
    """A clique plus the extreme host-graph degrees attained on it."""

    vertices: tuple[int, ...]
    delta: int
    max_deg: int


def _ceil_div(a: int, b: int) -> int:
    # b > 0; correct for negative numerators too
    return -((-a) // b)


def enumerate_maximum_cliques(
    g: Graph, vertex_cap: int | None = 64
) -> list[CliqueRecord]:
    """Every clique of maximum size, each exactly once, in lexicographic order.

    Branch-and-bound search with pivoting over bitmask vertex sets; branches
    that cannot reach the best size found so far are cut.  Worst case is
    exponential, so inputs above ``vertex_cap`` vertices are refused (pass
    ``None`` to lift the guard).
    """
    if vertex_cap is not None and g.n > vertex_cap:
        raise ValueError(
            f"graph has {g.n} vertices, above the clique-enumeration cap of {vertex_cap}"
        )
    if g.n == 0:
        return []

    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u

    best_size = 0
    best: list[tuple[int, ...]] = []

    def expand(clique: list[int], cand: int, done: int) -> None:
        nonlocal best_size, best
        if cand == 0 and done == 0:
            size = len(clique)
            if size > best_size:
                best_size = size
                best = [tuple(clique)]
            elif size == best_size:
                best.append(tuple(clique))
            return
        if len(clique) + cand.bit_count() < best_size:
            return
        # pivot: vertex of cand|done covering the most candidates (ties: smallest index)
        pool = cand | done
        pivot = -1
        pivot_cover = -1
        p = pool
        while p:
            u = (p & -p).bit_length() - 1
            cover = (cand & masks[u]).bit_count()
            if cover > pivot_cover:
                pivot_cover = cover
                pivot = u
            p &= p - 1
        branch = cand & ~masks[pivot]
        while branch:
            bit = branch & -branch
            v = bit.bit_length() - 1
            clique.append(v)
            expand(clique, cand & masks[v], done & masks[v])
            clique.pop()
            cand &= ~bit
            done |= bit
            branch &= branch - 1

    expand([], (1 << g.n) - 1, 0)

    records = []
    for vertices in sorted(sorted(c) for c in best):
        degs = [g.degree(v) for v in vertices]
        records.append(
            CliqueRecord(vertices=tuple(vertices), delta=min(degs), max_deg=max(degs))
        )
    return records


def clique_bound(record: CliqueRecord, omega: int) -> int:
    """Label lower bound contributed by one maximum clique (clamped at 1)."""
    denominator = record.max_deg - omega + 2
    if denominator < 1:
        raise ValueError("clique vertex of degree below omega - 1; input is not a clique of its host")
    return max(1, _ceil_div(2 * record.delta - record.max_deg + 1, denominator))


def lower_bound_thm1(g: Graph, vertex_cap: int | None = None) -> int:
    """Best clique-degree lower bound on the d-lucky number of a connected graph.

    Disconnected input is a hard error (the bound's hypothesis), not a wrong
    answer.  Enumeration of maximum cliques is uncapped by default here
    because family instances routinely exceed the general-purpose guard of
    :func:`enumerate_maximum_cliques`.
    """
    if g.n < 1:
        raise ValueError("lower bound requires a nonempty graph")
    if not is_connected(g):
        raise ValueError("lower bound is stated for connected graphs only")
    records = enumerate_maximum_cliques(g, vertex_cap=vertex_cap)
    omega = len(records[0].vertices)
    return max(clique_bound(record, omega) for record in records)


def lower_bound_cor2(r: int, omega: int) -> int:
    """Bound specialization when every maximum-clique vertex has degree ``r``."""
    if omega < 1:
        raise ValueError("clique size omega must be >= 1")
    if r < omega - 1:
        raise ValueError(
            f"degree r={r} below omega-1={omega - 1}; a vertex of an omega-clique has degree >= omega-1"
        )
    return _ceil_div(r + 1, r - omega + 2)
