"""Hierarchical distance-vector labels over a DFS tree.

Each vertex stores the ordering indices of its root path, compressed into
runs of consecutive indices, plus its distance to the root and one trit per
further path vertex.  Layout (MSB first)::

    gamma(n) | s in count_width(n) bits
             | s x (first index - 1, last index - 1), index_width(n) bits each
             | d(v, root) in index_width(n) bits
             | pack_trits(delta_2 + 1, ..., delta_k + 1)

``k`` is not stored; it is the total length of the runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bits import BitString, LabelDecodeError, pack_trits, write_fixed, write_gamma
from .bounds import count_width, index_width
from .graph import Graph, RootedTree, VertexOrdering, iter_distance_rows, require_connected
from .hierarchy import HierarchicalDecomposition, HierLabelDecoded
from .trees import dfs_spanning_tree


@dataclass(frozen=True)
class HeavyColoring:
    """Blue heavy-path heads, red heavy children, and the heavy-first ordering."""

    blue: tuple[bool, ...]
    heavy_child: tuple[int, ...]  # -1 for leaves
    ordering: VertexOrdering

    def is_blue(self, v: int) -> bool:
        return self.blue[v]


def heavy_coloring(t: RootedTree) -> HeavyColoring:
    """Heavy-path colouring with the ordering that lists each heavy child
    right after its parent.

    The heavy child is the child with the largest subtree (smallest id on
    ties).  Every light child has at most half its parent's subtree, so a
    root path meets at most ``floor(log2 n) + 1`` blue vertices.
    """
    n = t.order
    size = t.subtree_sizes
    heavy = [-1] * n
    for v in range(n):
        best = -1
        for c in t.children[v]:
            if best < 0 or size[c] > size[best]:
                best = c
        heavy[v] = best
    blue = [True] * n
    for v in range(n):
        if heavy[v] >= 0:
            blue[heavy[v]] = False
    order = []
    stack = [t.root]
    while stack:
        v = stack.pop()
        order.append(v)
        light = [c for c in t.children[v] if c != heavy[v]]
        stack.extend(reversed(light))
        if heavy[v] >= 0:
            stack.append(heavy[v])
    return HeavyColoring(tuple(blue), tuple(heavy), VertexOrdering(tuple(order)))


def dfs_hierarchical_decomposition(g: Graph) -> HierarchicalDecomposition:
    """DFS tree from vertex 0 with one singleton bag per vertex (node id = vertex id)."""
    tree = dfs_spanning_tree(g, 0)
    return HierarchicalDecomposition(tree, tuple((v,) for v in range(g.order)), tuple(range(g.order)))


def index_runs(indices: np.ndarray) -> list[tuple[int, int]]:
    """Maximal runs of consecutive increasing values, as (first, last) pairs."""
    if indices.size == 0:
        return []
    breaks = np.flatnonzero(np.diff(indices) != 1) + 1
    starts = np.concatenate(([0], breaks))
    ends = np.concatenate((breaks - 1, [indices.size - 1]))
    return list(zip(indices[starts].tolist(), indices[ends].tolist()))


def _hdv_label(n: int, header: BitString, p: np.ndarray, x: np.ndarray) -> BitString:
    runs = index_runs(p)
    for (_, last), (first, _) in zip(runs, runs[1:]):
        if first <= last:
            raise AssertionError("root-path indices must increase along the path")
    deltas = np.diff(x)
    if deltas.size and (deltas.min() < -1 or deltas.max() > 1):
        raise AssertionError("tree-adjacent ancestors differ in distance by more than one")
    w = index_width(n)
    parts = [header, write_fixed(len(runs), count_width(n))]
    for first, last in runs:
        parts.append(write_fixed(first - 1, w))
        parts.append(write_fixed(last - 1, w))
    parts.append(write_fixed(int(x[0]), w))
    parts.append(pack_trits(deltas + 1))
    return BitString.concat(parts)


def hdv_encode(g: Graph) -> tuple[VertexOrdering, tuple[BitString, ...]]:
    """Label every vertex of a connected graph; labels are indexed by vertex id."""
    require_connected(g)
    n = g.order
    tree = dfs_spanning_tree(g, 0)
    ordering = heavy_coloring(tree).ordering
    index = ordering.positions + 1
    depth = tree.depth
    header = write_gamma(n)
    # walking in preorder keeps the current root path on a stack
    preorder = np.asarray(tree.preorder, dtype=np.int64)
    path = np.empty(n, dtype=np.int64)
    labels: list[BitString | None] = [None] * n
    for v, row in iter_distance_rows(g, preorder):
        d = depth[v]
        path[d] = v
        on_path = path[:d + 1]
        labels[v] = _hdv_label(n, header, index[on_path], row[on_path].astype(np.int64))
    return ordering, tuple(labels)


@lru_cache(maxsize=8192)
def hdv_decode(label: BitString) -> HierLabelDecoded:
    """Expand the runs into ``p`` and prefix-sum the trits into ``x``.

    Only labels the encoder could produce are accepted: runs must be maximal
    and increasing, distances non-negative, and the vertex's distance to
    itself (the final entry) zero.
    """
    cur = label.cursor()
    n = cur.read_gamma()
    s = cur.read_fixed(count_width(n))
    if s < 1:
        raise LabelDecodeError("label has no ancestor runs")
    w = index_width(n)
    p: list[int] = []
    prev_last = 0
    for _ in range(s):
        first = cur.read_fixed(w) + 1
        last = cur.read_fixed(w) + 1
        if not first <= last <= n or (prev_last and first <= prev_last + 1):
            raise LabelDecodeError(f"run ({first}, {last}) is not a maximal increasing run within 1..{n}")
        p.extend(range(first, last + 1))
        prev_last = last
    root_distance = cur.read_fixed(w)
    trits = cur.read_trits(len(p) - 1)
    if not cur.at_end():
        raise LabelDecodeError("trailing bits after the trit field")
    x = np.empty(len(p), dtype=np.int64)
    x[0] = root_distance
    x[1:] = root_distance + np.cumsum(trits.astype(np.int64) - 1)
    if x.min() < 0:
        raise LabelDecodeError("negative distance")
    if x.max() > n - 1:
        raise LabelDecodeError(f"distance exceeds {n - 1}")
    if x[-1] != 0:
        raise LabelDecodeError("distance to the labelled vertex itself is not zero")
    return HierLabelDecoded(tuple(p), tuple(x.tolist()))
