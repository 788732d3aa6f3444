"""Simple undirected graphs: representation, generators, and combining operators.

Vertices are dense 0-based indices.  Every operator documents its vertex
numbering, so labelings built on top of these graphs are reproducible
across runs and platforms.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Edges are normalized to ``(min, max)`` pairs, stored as a sorted tuple;
    construction rejects self-loops and out-of-range endpoints and collapses
    duplicates.  ``tags`` is an optional per-vertex role annotation (e.g.
    ``"clique"``, ``"pendant"``, ``"layer:2"``) used only for export and
    diagnostics, never by algorithms.  Equality compares vertex count and
    edge set; tags are ignored.
    """

    __slots__ = ("n", "edges", "tags", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), tags=None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        normalized = set()
        for edge in edges:
            u, v = edge
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            normalized.add((u, v) if u < v else (v, u))
        adj = [[] for _ in range(n)]
        for u, v in sorted(normalized):
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = tuple(sorted(normalized))
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        if tags is not None:
            tags = tuple(str(t) for t in tags)
            if len(tags) != n:
                raise ValueError("tags length must equal vertex count")
        self.tags = tags

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def _check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise IndexError(f"vertex {u} out of range for {self.n} vertices")

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return len(self._adj[u])

    def neighbors(self, u: int) -> tuple[int, ...]:
        self._check_vertex(u)
        return self._adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def with_tags(self, tags) -> "Graph":
        """Copy of this graph carrying the given per-vertex tags."""
        return Graph(self.n, self.edges, tags=tags)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def complete_graph(n: int) -> Graph:
    """K_n; rejects n = 0."""
    if n < 1:
        raise ValueError("complete graph requires n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(m: int) -> Graph:
    """P_m on vertices 0..m-1 with edges between consecutive indices."""
    if m < 1:
        raise ValueError("path graph requires m >= 1")
    return Graph(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n on vertices 0..n-1; rejects n < 3."""
    if n < 3:
        raise ValueError("cycle graph requires n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges.append((0, n - 1))
    return Graph(n, edges)


def complement(g: Graph) -> Graph:
    """Graph with exactly the non-edges of ``g`` (tags preserved)."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges, tags=g.tags)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product of two nonempty graphs.

    Vertex (a, x) with a in V(g), x in V(h) is flattened row-major to index
    ``a * h.n + x`` (g-index major).  (a, x) ~ (b, y) iff a = b and x ~ y in
    h, or x = y and a ~ b in g; degrees add up coordinate-wise.
    """
    if g.n == 0 or h.n == 0:
        raise ValueError("cartesian product requires nonempty factors")
    edges = []
    for a in range(g.n):
        base = a * h.n
        for x, y in h.edges:
            edges.append((base + x, base + y))
    for a, b in g.edges:
        for x in range(h.n):
            edges.append((a * h.n + x, b * h.n + x))
    return Graph(g.n * h.n, edges)


def corona(g: Graph, h: Graph) -> Graph:
    """Corona of ``g`` with ``h``: one fresh copy of h joined to each g-vertex.

    Numbering: g's vertices keep indices 0..g.n-1; the copy attached to
    g-vertex i occupies the block ``g.n + i * h.n .. g.n + (i + 1) * h.n - 1``
    (copies in g-vertex order).
    """
    if g.n == 0:
        raise ValueError("corona requires a nonempty base graph")
    edges = list(g.edges)
    for i in range(g.n):
        base = g.n + i * h.n
        for x, y in h.edges:
            edges.append((base + x, base + y))
        for x in range(h.n):
            edges.append((i, base + x))
    return Graph(g.n + g.n * h.n, edges)


def complete_multipartite(n: int, t: int) -> Graph:
    """Complete t-partite graph with parts of size n, numbered part-major.

    Part j (0-based) occupies indices ``j * n .. (j + 1) * n - 1``; edges run
    exactly between distinct parts, so every degree is n * (t - 1).
    """
    if n < 1 or t < 1:
        raise ValueError("complete multipartite graph requires n >= 1 and t >= 1")
    edges = []
    for j in range(t):
        for jj in range(j + 1, t):
            for x in range(n):
                for y in range(n):
                    edges.append((j * n + x, jj * n + y))
    return Graph(n * t, edges)


def subdivide_edges(g: Graph, edges_to_split: Iterable[Sequence[int]]) -> Graph:
    """Replace each listed edge {u, v} by a path u - w - v through a fresh vertex.

    New vertices are appended after the existing indices, one per replaced
    edge, in lexicographic order of the replaced (normalized) edges.  Tags,
    when present, are extended with ``"subdivision"`` for the new vertices.
    """
    split = set()
    for edge in edges_to_split:
        u, v = edge
        e = (u, v) if u < v else (v, u)
        if e not in set(g.edges):
            raise ValueError(f"cannot subdivide non-edge {e}")
        split.add(e)
    ordered = sorted(split)
    edges = [e for e in g.edges if e not in split]
    for rank, (u, v) in enumerate(ordered):
        w = g.n + rank
        edges.append((u, w))
        edges.append((w, v))
    tags = None
    if g.tags is not None:
        tags = g.tags + ("subdivision",) * len(ordered)
    return Graph(g.n + len(ordered), edges, tags=tags)


def bfs_order(g: Graph) -> list[int]:
    """Breadth-first vertex order from vertex 0, ties by index.

    Later components are entered at their smallest unvisited index.
    """
    seen = [False] * g.n
    order = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return order


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n
