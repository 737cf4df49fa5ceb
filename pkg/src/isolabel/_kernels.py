"""Compiled traversal kernels over CSR adjacency arrays."""

import numba as nb
import numpy as np


@nb.njit(cache=True)
def bfs_rows(indptr, indices, sources, out):
    """Fill ``out[r]`` with BFS distances from ``sources[r]`` (-1 = unreachable).

    Switches to bottom-up sweeps once the frontier's edge count dominates the
    unvisited set, which keeps dense graphs near O(n) per source.
    """
    n = indptr.shape[0] - 1
    frontier = np.empty(n, np.int64)
    nxt = np.empty(n, np.int64)
    in_frontier = np.zeros(n, np.bool_)
    for r in range(sources.shape[0]):
        row = out[r]
        row[:] = -1
        s = sources[r]
        row[s] = 0
        frontier[0] = s
        fsize = 1
        visited = 1
        level = 0
        while fsize > 0 and visited < n:
            level += 1
            nsize = 0
            fedges = 0
            for i in range(fsize):
                u = frontier[i]
                fedges += indptr[u + 1] - indptr[u]
            if fedges < 2 * (n - visited):
                for i in range(fsize):
                    u = frontier[i]
                    for j in range(indptr[u], indptr[u + 1]):
                        w = indices[j]
                        if row[w] < 0:
                            row[w] = level
                            nxt[nsize] = w
                            nsize += 1
            else:
                for i in range(fsize):
                    in_frontier[frontier[i]] = True
                for w in range(n):
                    if row[w] < 0:
                        for j in range(indptr[w], indptr[w + 1]):
                            if in_frontier[indices[j]]:
                                row[w] = level
                                nxt[nsize] = w
                                nsize += 1
                                break
                for i in range(fsize):
                    in_frontier[frontier[i]] = False
            visited += nsize
            frontier, nxt = nxt, frontier
            fsize = nsize
    return out


@nb.njit(cache=True)
def dfs_parents(indptr, indices, root):
    """Iterative DFS scanning neighbours in CSR (ascending) order.

    Returns the parent array (root and unreached vertices get -1) and the
    number of vertices reached.
    """
    n = indptr.shape[0] - 1
    parent = np.full(n, -1, np.int64)
    seen = np.zeros(n, np.bool_)
    stack = np.empty(n, np.int64)
    ptr = indptr[:-1].copy()
    stack[0] = root
    top = 1
    seen[root] = True
    reached = 1
    while top > 0:
        u = stack[top - 1]
        advanced = False
        while ptr[u] < indptr[u + 1]:
            w = indices[ptr[u]]
            ptr[u] += 1
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                stack[top] = w
                top += 1
                reached += 1
                advanced = True
                break
        if not advanced:
            top -= 1
    return parent, reached


@nb.njit(cache=True)
def component_labels(indptr, indices):
    """Label components 0, 1, ... in order of their smallest vertex."""
    n = indptr.shape[0] - 1
    label = np.full(n, -1, np.int64)
    stack = np.empty(n, np.int64)
    count = 0
    for s in range(n):
        if label[s] >= 0:
            continue
        label[s] = count
        stack[0] = s
        top = 1
        while top > 0:
            top -= 1
            u = stack[top]
            for j in range(indptr[u], indptr[u + 1]):
                w = indices[j]
                if label[w] < 0:
                    label[w] = count
                    stack[top] = w
                    top += 1
        count += 1
    return label, count
