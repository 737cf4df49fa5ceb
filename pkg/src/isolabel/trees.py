"""Spanning trees, tours and tree centroids."""

from __future__ import annotations

import numpy as np

from . import _kernels
from .graph import DisconnectedGraphError, Graph, RootedTree, VertexOrdering, components


def dfs_spanning_tree(g: Graph, root: int = 0) -> RootedTree:
    """Depth-first spanning tree exploring neighbours in ascending id order.

    Every non-tree edge then joins a vertex to one of its tree ancestors.
    """
    if not 0 <= root < g.order:
        raise IndexError(f"root {root} out of range")
    parent, reached = _kernels.dfs_parents(g.indptr, g.indices, root)
    if reached != g.order:
        raise DisconnectedGraphError("graph not connected")
    return RootedTree(root, parent)


def tour_ordering(g: Graph, t: RootedTree) -> VertexOrdering:
    """Order vertices by first appearance on the doubled-tree Euler walk.

    The walk starts at the root and descends into children in ascending id
    order, so first appearances are exactly the tree's preorder.
    """
    if t.order != g.order:
        raise ValueError("tree does not span the graph")
    for v in range(g.order):
        p = t.parent_of(v)
        if p is not None and not g.has_edge(v, p):
            raise ValueError(f"tree edge {p}-{v} is not an edge of the graph")
    return VertexOrdering(t.preorder)


def tree_centroid(t: Graph | RootedTree) -> int:
    """Smallest-id vertex whose removal leaves components of size <= n/2."""
    if isinstance(t, RootedTree):
        tree = t
    else:
        if t.order == 0:
            raise ValueError("empty graph has no centroid")
        if t.size != t.order - 1 or len(components(t)) != 1:
            raise ValueError("input is not a tree")
        parent, _ = _kernels.dfs_parents(t.indptr, t.indices, 0)
        tree = RootedTree(0, parent)
    n = tree.order
    size = tree.subtree_sizes
    heaviest = np.full(n, 0, dtype=np.int64)
    heaviest = np.maximum(heaviest, n - size)
    par = tree.parent
    for v in range(n):
        p = par[v]
        if p >= 0 and size[v] > heaviest[p]:
            heaviest[p] = size[v]
    return int(np.flatnonzero(2 * heaviest <= n)[0])
