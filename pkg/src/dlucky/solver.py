"""Exact d-lucky numbers on small graphs by exhaustive backtracking.

The search assigns labels in breadth-first vertex order (from vertex 0, ties
by index) and defers checking an edge until every neighbor of both endpoints
is labeled; only then are the two endpoint sums final, so earlier checks
would prune wrongly.  Label budgets are tried k = 1, 2, ... so the first
success is the exact minimum and the exhausted smaller budgets certify it.

The hot loop lives in a compiled extension (``_searchcore``) when available,
with a behaviorally identical pure-Python fallback selected at import time.
Witnesses are the first labeling found, i.e. the lexicographically smallest
one with respect to the search's vertex order.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from .graph import Graph, bfs_order
from .labeling import Labeling

try:
    from . import _searchcore as _compiled
except ImportError:  # pragma: no cover - depends on build environment
    _compiled = None
from . import _search as _pure

BACKEND = "compiled" if _compiled is not None else "pure"

DEFAULT_VERTEX_CAP = 16


def solver_backend() -> str:
    """Name of the kernel selected at import: ``"compiled"`` or ``"pure"``."""
    return BACKEND


def available_backends() -> tuple[str, ...]:
    return ("compiled", "pure") if _compiled is not None else ("pure",)


def _kernel(backend: str | None):
    if backend is None:
        return _compiled if _compiled is not None else _pure
    if backend == "pure":
        return _pure
    if backend == "compiled":
        if _compiled is None:
            raise ValueError("compiled search kernel is not available in this install")
        return _compiled
    raise ValueError(f"unknown solver backend {backend!r}")


@dataclass(frozen=True)
class SolveResult:
    """Exact search outcome: the minimum budget with a witness, or exhaustion.

    ``eta is None`` means every budget up to ``k_tried`` was exhausted.  On
    success the witness verifies with zero conflicts and the exhausted runs
    at smaller budgets certify minimality.  ``nodes_explored`` counts label
    placements over all budgets tried.
    """

    eta: int | None
    witness: Labeling | None
    nodes_explored: int
    k_tried: int

    @property
    def exceeded(self) -> bool:
        return self.eta is None


def _prepare(g: Graph):
    """Flatten graph structure into the arrays the kernels consume."""
    n = g.n
    order = bfs_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i

    adj_start = array("i", [0] * (n + 1))
    adj_flat = array("i")
    for v in range(n):
        adj_start[v + 1] = adj_start[v] + g.degree(v)
        adj_flat.extend(g.neighbors(v))

    # edge {u, v} becomes checkable when the last vertex of N(u) | N(v) is placed
    ready: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v in g.edges:
        last = max(pos[w] for w in set(g.neighbors(u)) | set(g.neighbors(v)))
        ready[last].append((u, v))
    chk_start = array("i", [0] * (n + 1))
    chk_u = array("i")
    chk_v = array("i")
    for d in range(n):
        chk_start[d + 1] = chk_start[d] + len(ready[d])
        for u, v in ready[d]:
            chk_u.append(u)
            chk_v.append(v)

    degrees = array("i", [g.degree(v) for v in range(n)])
    return array("i", order), adj_start, adj_flat, chk_start, chk_u, chk_v, degrees


def _run(kernel, g, k, prepared):
    order, adj_start, adj_flat, chk_start, chk_u, chk_v, degrees = prepared
    sums = array("i", degrees)
    labels = array("i", bytes(4 * g.n))
    found, nodes = kernel.search(
        g.n, k, order, adj_start, adj_flat, chk_start, chk_u, chk_v, sums, labels
    )
    witness = Labeling(labels, k_max=k) if found else None
    return witness, nodes


def exists_labeling(g: Graph, k: int, backend: str | None = None) -> Labeling | None:
    """A verifying labeling into 1..k, or None after certified exhaustion."""
    if g.n == 0:
        raise ValueError("search requires a nonempty graph")
    if k < 1:
        raise ValueError("label budget k must be >= 1")
    witness, _ = _run(_kernel(backend), g, k, _prepare(g))
    return witness


def exact_eta(
    g: Graph,
    max_k: int,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    backend: str | None = None,
) -> SolveResult:
    """Least budget k <= max_k admitting a d-lucky labeling, with witness.

    Budgets are searched in increasing order, so success at k certifies that
    exhaustion happened at every smaller budget.  Graphs above ``vertex_cap``
    vertices are refused; raise the cap explicitly for bigger (slower) runs.
    """
    if g.n == 0:
        raise ValueError("search requires a nonempty graph")
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    if g.n > vertex_cap:
        raise ValueError(
            f"graph has {g.n} vertices, above the solver vertex cap of {vertex_cap}"
        )
    kernel = _kernel(backend)
    prepared = _prepare(g)
    total_nodes = 0
    for k in range(1, max_k + 1):
        witness, nodes = _run(kernel, g, k, prepared)
        total_nodes += nodes
        if witness is not None:
            return SolveResult(
                eta=k, witness=witness, nodes_explored=total_nodes, k_tried=k
            )
    return SolveResult(
        eta=None, witness=None, nodes_explored=total_nodes, k_tried=max_k
    )
