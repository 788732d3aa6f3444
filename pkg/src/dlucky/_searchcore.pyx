# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel for the labeling search.

Must stay semantically identical to the pure-Python kernel in ``_search.py``:
same visit order, same node counts, same witness.
"""


def search(int n, int k, int[::1] order, int[::1] adj_start, int[::1] adj_flat,
           int[::1] chk_start, int[::1] chk_u, int[::1] chk_v,
           int[::1] sums, int[::1] labels):
    cdef long long nodes = 0
    cdef int depth = 0
    cdef int start = 1
    cdef int v, ell, i
    cdef bint placed, ok
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
