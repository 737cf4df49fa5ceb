"""Graph families: named small graphs, seeded random graphs, exhaustive enumeration."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np

from .graph import Graph

ENUMERATION_MAX_N = 7


def path_graph(n: int) -> Graph:
    return Graph.from_edge_arrays(n, np.arange(n - 1), np.arange(1, n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edge_arrays(n, np.arange(n), (np.arange(n) + 1) % n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and leaves ``1..leaves``."""
    return Graph.from_edge_arrays(leaves + 1, np.zeros(leaves, dtype=np.int64), np.arange(1, leaves + 1))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic for a given seed.

    Pairs ``u < v`` are laid out row-major and sampled by geometric skips, so
    the cost is proportional to the number of edges rather than ``n**2``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    if n < 0:
        raise ValueError("negative vertex count")
    total = n * (n - 1) // 2
    if p == 0.0 or total == 0:
        return Graph.empty(n)
    if p == 1.0:
        picks = np.arange(total, dtype=np.int64)
    else:
        rng = np.random.default_rng(seed)
        expected = total * p
        batch = int(expected + 6 * np.sqrt(expected) + 16)
        parts = []
        pos = -1
        while pos < total:
            # tiny p can overflow int64; any gap past the end is equivalent
            gaps = np.clip(rng.geometric(p, size=batch), 1, total + 1)
            steps = pos + np.cumsum(gaps)
            parts.append(steps)
            pos = int(steps[-1])
        picks = np.concatenate(parts)
        picks = picks[picks < total]
    # row u owns linear slots [start[u], start[u] + n - 1 - u)
    rows = np.arange(n, dtype=np.int64)
    start = rows * (2 * n - rows - 1) // 2
    u = np.searchsorted(start, picks, side="right") - 1
    v = picks - start[u] + u + 1
    return Graph.from_edge_arrays(n, u, v)


def random_tree(n: int, seed: int) -> Graph:
    """Random recursive tree: vertex ``i >= 1`` attaches to a uniform vertex ``< i``."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    rng = np.random.default_rng(seed)
    child = np.arange(1, n, dtype=np.int64)
    parent = rng.integers(0, child) if n > 1 else np.zeros(0, dtype=np.int64)
    return Graph.from_edge_arrays(n, parent, child)


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Every labelled connected simple graph on ``0..n-1``, each exactly once.

    Edge subsets are walked in increasing bitmask order over the
    lexicographic pair list; connectivity is tested with adjacency bitmasks.
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise ValueError(f"enumeration is limited to 1 <= n <= {ENUMERATION_MAX_N}")
    pairs = list(combinations(range(n), 2))
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        edges = []
        for bit, (a, b) in enumerate(pairs):
            if mask >> bit & 1:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
                edges.append((a, b))
        reached = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~reached
            reached |= nxt
        if reached == full:
            yield Graph.from_edges(n, edges)


def enumerate_all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled simple graph on ``0..n-1``, connected or not."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise ValueError(f"enumeration is limited to 1 <= n <= {ENUMERATION_MAX_N}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pr for bit, pr in enumerate(pairs) if mask >> bit & 1])
