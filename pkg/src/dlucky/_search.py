"""Pure-Python backtracking kernel for the labeling search.

Mirrors the compiled kernel in ``_searchcore.pyx`` operation for operation;
both must visit the same nodes in the same order so that results and node
counts are identical regardless of which backend is active.
"""

from __future__ import annotations


def search(n, k, order, adj_start, adj_flat, chk_start, chk_u, chk_v, sums, labels):
    """Depth-first search for a conflict-free labeling into 1..k.

    Vertices are assigned in ``order``; after placing the vertex at position
    ``d``, exactly the edges listed in ``chk_*[chk_start[d]:chk_start[d+1]]``
    have both endpoint sums final and are compared.  ``sums`` must start as
    the degree array and ``labels`` as zeros; on success ``labels`` holds the
    witness (indexed by vertex).  Returns ``(found, nodes)`` where ``nodes``
    counts label placements attempted.
    """
    nodes = 0
    depth = 0
    start = 1
    while True:
        v = order[depth]
        placed = False
        ell = start
        while ell <= k:
            nodes += 1
            for i in range(adj_start[v], adj_start[v + 1]):
                sums[adj_flat[i]] += ell
            labels[v] = ell
            ok = True
            for i in range(chk_start[depth], chk_start[depth + 1]):
                if sums[chk_u[i]] == sums[chk_v[i]]:
                    ok = False
                    break
            if ok:
                placed = True
                break
            for i in range(adj_start[v], adj_start[v + 1]):
                sums[adj_flat[i]] -= ell
            labels[v] = 0
            ell += 1
        if placed:
            if depth == n - 1:
                return True, nodes
            depth += 1
            start = 1
        else:
            if depth == 0:
                return False, nodes
            depth -= 1
            v = order[depth]
            ell = labels[v]
            for i in range(adj_start[v], adj_start[v + 1]):
                sums[adj_flat[i]] -= ell
            labels[v] = 0
            start = ell + 1
