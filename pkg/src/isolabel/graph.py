"""Undirected simple graphs, vertex orderings and rooted trees."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np
import scipy.sparse as sp

from . import _kernels

INF = math.inf

# below this many edges a numpy sort beats building scipy sparse matrices
SMALL_EDGE_COUNT = 1 << 16


class GraphFormatError(ValueError):
    """Malformed graph text or an edge list that is not a simple graph."""


class DisconnectedGraphError(ValueError):
    """A connected-only operation received a disconnected graph."""


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class Graph:
    """Immutable simple undirected graph on ``0..order-1`` in CSR form.

    Neighbour lists are sorted ascending; ``neighbors(v)`` is a read-only
    view into the shared index array.
    """

    def __init__(self, order: int, indptr: np.ndarray, indices: np.ndarray):
        self.order = int(order)
        self.indptr = _readonly(np.ascontiguousarray(indptr, dtype=np.int64))
        self.indices = _readonly(np.ascontiguousarray(indices, dtype=np.int64))
        if self.indptr.shape != (self.order + 1,):
            raise ValueError("indptr must have order + 1 entries")

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Sequence[int]]) -> "Graph":
        pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        return cls.from_edge_arrays(order, pairs[:, 0], pairs[:, 1])

    @classmethod
    def from_edge_arrays(cls, order: int, u, v) -> "Graph":
        """Build from parallel endpoint arrays; rejects loops and duplicates."""
        if order < 0:
            raise GraphFormatError("negative vertex count")
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if u.size:
            lo, hi = min(u.min(), v.min()), max(u.max(), v.max())
            if lo < 0 or hi >= order:
                raise GraphFormatError(f"endpoint out of range 0..{order - 1}")
            loops = np.flatnonzero(u == v)
            if loops.size:
                raise GraphFormatError(f"loop at vertex {u[loops[0]]}")
        a, b = np.minimum(u, v), np.maximum(u, v)
        if a.size <= SMALL_EDGE_COUNT:
            rows = np.concatenate((a, b))
            cols = np.concatenate((b, a))
            key = rows * max(order, 1) + cols
            perm = np.argsort(key, kind="stable")
            if np.any(np.diff(key[perm]) == 0):
                raise GraphFormatError("duplicate edge")
            indptr = np.zeros(order + 1, dtype=np.int64)
            np.cumsum(np.bincount(rows, minlength=order), out=indptr[1:])
            return cls(order, indptr, cols[perm])
        ones = np.ones(a.size, dtype=np.int32)
        upper = sp.coo_matrix((ones, (a, b)), shape=(order, order)).tocsr()
        upper.sum_duplicates()
        if upper.nnz != a.size:
            raise GraphFormatError("duplicate edge")
        full = (upper + upper.T).tocsr()
        full.sort_indices()
        return cls(order, full.indptr, full.indices)

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, np.zeros(order + 1, dtype=np.int64), np.zeros(0, dtype=np.int64))

    @property
    def size(self) -> int:
        return self.indices.size // 2

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        flat = self.indices.tolist()
        ptr = self.indptr.tolist()
        return tuple(tuple(flat[ptr[v]:ptr[v + 1]]) for v in range(self.order))

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        i = np.searchsorted(nbrs, v)
        return bool(i < nbrs.size and nbrs[i] == v)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, nbrs in enumerate(self.adjacency):
            out.extend((u, w) for w in nbrs if w > u)
        return out

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Subgraph on ``vertices`` relabelled ``0..k-1`` in ascending id order.

        Returns the subgraph and the local-to-global vertex map.
        """
        keep = np.unique(np.asarray(vertices, dtype=np.int64))
        local = np.full(self.order, -1, dtype=np.int64)
        local[keep] = np.arange(keep.size)
        rows = np.repeat(np.arange(self.order), np.diff(self.indptr))
        mask = (local[rows] >= 0) & (local[self.indices] >= 0) & (rows < self.indices)
        sub = Graph.from_edge_arrays(keep.size, local[rows[mask]], local[self.indices[mask]])
        return sub, keep.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.order == other.order
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __hash__(self) -> int:
        return hash((self.order, self.indices.tobytes(), self.indptr.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    labels, count = _kernels.component_labels(g.indptr, g.indices)
    groups: list[list[int]] = [[] for _ in range(count)]
    for v, c in enumerate(labels.tolist()):
        groups[c].append(v)
    return groups


def is_connected(g: Graph) -> bool:
    if g.order <= 1:
        return True
    _, reached = _kernels.dfs_parents(g.indptr, g.indices, 0)
    return reached == g.order


def require_connected(g: Graph) -> None:
    if g.order == 0:
        raise ValueError("graph has no vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("graph not connected")


def bfs_distances(g: Graph, src: int) -> tuple:
    """Plain breadth-first search; unreachable vertices get ``INF``.

    Deliberately independent of the compiled kernels so tests can use it
    as a ground-truth oracle.
    """
    if not 0 <= src < g.order:
        raise IndexError(f"source {src} out of range 0..{g.order - 1}")
    adj = g.adjacency
    dist = [INF] * g.order
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] is INF:
                dist[w] = du
                queue.append(w)
    return tuple(dist)


def distance_rows(g: Graph, sources: Sequence[int] | np.ndarray) -> np.ndarray:
    """Distances from each source as an ``int32`` array, ``-1`` if unreachable."""
    src = np.asarray(sources, dtype=np.int64).reshape(-1)
    if src.size and (src.min() < 0 or src.max() >= g.order):
        raise IndexError("source out of range")
    out = np.empty((src.size, g.order), dtype=np.int32)
    return _kernels.bfs_rows(g.indptr, g.indices, src, out)


def iter_distance_rows(
    g: Graph, sources: Sequence[int] | np.ndarray, budget: int = 1 << 24
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(source, row)`` pairs, computing rows in memory-bounded chunks."""
    src = np.asarray(sources, dtype=np.int64).reshape(-1)
    chunk = max(1, budget // max(1, g.order))
    for start in range(0, src.size, chunk):
        block = src[start:start + chunk]
        rows = distance_rows(g, block)
        for s, row in zip(block.tolist(), rows):
            yield s, row


@dataclass(frozen=True)
class VertexOrdering:
    """A permutation ``perm`` with ``perm[i]`` the vertex of index ``i + 1``."""

    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("ordering is not a permutation of 0..n-1")

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(n)))

    def __len__(self) -> int:
        return len(self.perm)

    @cached_property
    def positions(self) -> np.ndarray:
        pos = np.empty(len(self.perm), dtype=np.int64)
        pos[list(self.perm)] = np.arange(len(self.perm))
        return _readonly(pos)

    def index_of(self, v: int) -> int:
        """1-based V(G)-index of vertex ``v``."""
        return int(self.positions[v]) + 1

    def vertex_at(self, index: int) -> int:
        """Vertex with 1-based V(G)-index ``index``."""
        return self.perm[index - 1]


class RootedTree:
    """Rooted tree on ``0..n-1`` given by a parent array (root has -1)."""

    def __init__(self, root: int, parent: Sequence[int] | np.ndarray):
        par = np.asarray(parent, dtype=np.int64).copy()
        n = par.size
        if not 0 <= root < n:
            raise ValueError("root out of range")
        if par[root] != -1:
            raise ValueError("root must have no parent")
        others = np.delete(np.arange(n), root)
        if n > 1 and (par[others].min() < 0 or par[others].max() >= n):
            raise ValueError("every non-root vertex needs a parent in range")
        self.root = int(root)
        self.parent = _readonly(par)
        if len(self.preorder) != n:
            raise ValueError("parent array is not a tree (cycle or unreachable vertex)")

    @property
    def order(self) -> int:
        return self.parent.size

    def parent_of(self, v: int) -> int | None:
        p = int(self.parent[v])
        return None if p < 0 else p

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in range(self.order)]
        for v, p in enumerate(self.parent.tolist()):
            if p >= 0:
                kids[p].append(v)
        return tuple(tuple(k) for k in kids)

    @cached_property
    def preorder(self) -> tuple[int, ...]:
        """Preorder visiting children in ascending id order."""
        order = []
        stack = [self.root]
        kids = self.children
        while stack and len(order) <= self.order:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(kids[v]))
        return tuple(order)

    @cached_property
    def depth(self) -> np.ndarray:
        d = np.zeros(self.order, dtype=np.int64)
        par = self.parent
        for v in self.preorder[1:]:
            d[v] = d[par[v]] + 1
        return _readonly(d)

    @cached_property
    def subtree_sizes(self) -> np.ndarray:
        size = np.ones(self.order, dtype=np.int64)
        par = self.parent
        for v in reversed(self.preorder[1:]):
            size[par[v]] += size[v]
        return _readonly(size)

    @cached_property
    def _intervals(self) -> tuple[np.ndarray, np.ndarray]:
        pos = np.empty(self.order, dtype=np.int64)
        pos[list(self.preorder)] = np.arange(self.order)
        return pos, pos + self.subtree_sizes

    def is_ancestor(self, a: int, v: int) -> bool:
        """True if ``a`` lies on the root path of ``v`` (inclusive)."""
        start, end = self._intervals
        return bool(start[a] <= start[v] < end[a])

    def root_path(self, v: int) -> list[int]:
        path = [v]
        par = self.parent
        while par[path[-1]] >= 0:
            path.append(int(par[path[-1]]))
        path.reverse()
        return path

    def tree_edges(self) -> set[tuple[int, int]]:
        return {(min(v, p), max(v, p)) for v, p in enumerate(self.parent.tolist()) if p >= 0}

    def as_graph(self) -> Graph:
        v = [i for i, p in enumerate(self.parent.tolist()) if p >= 0]
        return Graph.from_edge_arrays(self.order, v, self.parent[v])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self.root == other.root and np.array_equal(self.parent, other.parent)

    def __repr__(self) -> str:
        return f"RootedTree(root={self.root}, order={self.order})"


def parse_graph(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines are comments."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    if not rows:
        raise GraphFormatError("missing header line 'n m'")
    lineno, header = rows[0]
    try:
        n, m = (int(tok) for tok in header)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: header must be 'n m'") from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative count")
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(rows) - 1}")
    us, vs = [], []
    for lineno, toks in rows[1:]:
        try:
            u, v = (int(tok) for tok in toks)
        except ValueError:
            raise GraphFormatError(f"line {lineno}: edge must be 'u v'") from None
        us.append(u)
        vs.append(v)
    return Graph.from_edge_arrays(n, us, vs)


def format_graph(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g))
