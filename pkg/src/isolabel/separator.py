"""Balanced-separator decompositions and explicit ancestor-list labels.

A separator oracle maps a graph to ``SeparatorParts(S, X, Y)``.  The
decomposition builder recurses on ``G[X]`` and ``G[Y]`` and re-checks the
oracle's contract on every call.

Label layout (MSB first)::

    gamma(n) | a in count_width(n) bits | a x (index - 1, distance), index_width(n) bits each
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bits import BitString, LabelDecodeError, write_fixed, write_gamma
from .bounds import count_width, index_width
from .graph import Graph, RootedTree, VertexOrdering, bfs_distances, components, iter_distance_rows, require_connected
from .hierarchy import HierarchicalDecomposition, HierLabelDecoded
from .trees import tree_centroid


class OracleContractError(ValueError):
    """A separator oracle returned parts that break its contract."""

    def __init__(self, message: str, graph: Graph):
        super().__init__(message)
        self.graph = graph


@dataclass(frozen=True)
class SeparatorParts:
    S: tuple[int, ...]
    X: tuple[int, ...]
    Y: tuple[int, ...]


def split_components(g: Graph, separator) -> SeparatorParts:
    """Distribute the components of ``g - S`` over two sides, largest first.

    Each component goes to the currently smaller side.  When every
    component has at most ``n/2`` vertices both sides end up with at most
    ``2n/3``.
    """
    sep = set(separator)
    rest = [v for v in range(g.order) if v not in sep]
    pieces = []
    if rest:
        sub, back = g.induced_subgraph(rest)
        pieces = [[back[v] for v in comp] for comp in components(sub)]
    pieces.sort(key=lambda c: (-len(c), c[0]))
    x: list[int] = []
    y: list[int] = []
    for piece in pieces:
        (x if len(x) <= len(y) else y).extend(piece)
    return SeparatorParts(tuple(sorted(sep)), tuple(sorted(x)), tuple(sorted(y)))


class SeparatorOracle:
    """Callable ``Graph -> SeparatorParts`` with a declared size bound ``f(n)``."""

    def size_bound(self, n: int) -> int:
        return n

    def __call__(self, g: Graph) -> SeparatorParts:
        raise NotImplementedError


def _largest_component(g: Graph) -> list[int]:
    return max(components(g), key=lambda c: (len(c), -c[0]))


def is_forest(g: Graph) -> bool:
    return g.size == g.order - len(components(g))


class CentroidOracle(SeparatorOracle):
    """Single-vertex separators for forests: the centroid of the largest tree."""

    def size_bound(self, n: int) -> int:
        return 1

    def __call__(self, g: Graph) -> SeparatorParts:
        if g.order == 0:
            return SeparatorParts((), (), ())
        if not is_forest(g):
            raise ValueError("centroid separators need a forest")
        comp = _largest_component(g)
        tree, back = g.induced_subgraph(comp)
        return split_components(g, [back[tree_centroid(tree)]])


class BfsLayerOracle(SeparatorOracle):
    """A BFS layer of the largest component that splits it roughly in half.

    Balanced for any graph, but the layer can be as large as the graph, so
    no size guarantee beyond ``n`` is claimed.
    """

    def __call__(self, g: Graph) -> SeparatorParts:
        if g.order == 0:
            return SeparatorParts((), (), ())
        comp = _largest_component(g)
        dist = bfs_distances(g, comp[0])
        layers: dict[int, list[int]] = {}
        for v in comp:
            layers.setdefault(dist[v], []).append(v)
        seen = 0
        for level in range(len(layers)):
            seen += len(layers[level])
            if 2 * seen >= len(comp):
                return split_components(g, layers[level])
        raise AssertionError("unreachable: the last layer always completes the component")


class AutoOracle(SeparatorOracle):
    """Centroids while the graph is a forest, BFS layers otherwise."""

    def __init__(self):
        self._centroid = CentroidOracle()
        self._layer = BfsLayerOracle()

    def __call__(self, g: Graph) -> SeparatorParts:
        return (self._centroid if is_forest(g) else self._layer)(g)


def check_separator(g: Graph, parts: SeparatorParts, bound: int) -> None:
    n = g.order
    s, x, y = set(parts.S), set(parts.X), set(parts.Y)
    if not s and n:
        raise OracleContractError("empty separator", g)
    if len(s) + len(x) + len(y) != n or (s | x | y) != set(range(n)):
        raise OracleContractError("S, X, Y do not partition the vertex set", g)
    if 3 * len(x) > 2 * n or 3 * len(y) > 2 * n:
        raise OracleContractError(f"side sizes {len(x)}, {len(y)} exceed 2n/3 for n={n}", g)
    if len(s) > bound:
        raise OracleContractError(f"separator of size {len(s)} exceeds declared bound {bound}", g)
    adj = g.adjacency
    for u in x:
        for w in adj[u]:
            if w in y:
                raise OracleContractError(f"edge {u}-{w} joins X and Y", g)


def build_separator_decomposition(g: Graph, oracle: SeparatorOracle | None = None) -> HierarchicalDecomposition:
    """Binary bag tree: the root bag is a separator, children decompose the sides."""
    if g.order == 0:
        raise ValueError("graph has no vertices")
    oracle = oracle or AutoOracle()
    bags: list[tuple[int, ...]] = []
    parents: list[int] = []
    stack: list[tuple[Graph, list[int], int]] = [(g, list(range(g.order)), -1)]
    while stack:
        sub, back, parent = stack.pop()
        parts = oracle(sub)
        if not parts.S:
            # an empty separator becomes non-empty by moving one vertex into it
            moved = min(parts.X + parts.Y)
            parts = SeparatorParts(
                (moved,),
                tuple(v for v in parts.X if v != moved),
                tuple(v for v in parts.Y if v != moved),
            )
        check_separator(sub, parts, oracle.size_bound(sub.order))
        node = len(bags)
        bags.append(tuple(back[v] for v in parts.S))
        parents.append(parent)
        for side in (parts.Y, parts.X):
            if side:
                child, local = sub.induced_subgraph(side)
                stack.append((child, [back[v] for v in local], node))
    return HierarchicalDecomposition.from_bags(RootedTree(0, parents), bags)


def sep_encode(
    g: Graph, decomp: HierarchicalDecomposition, ordering: VertexOrdering | None = None
) -> tuple[BitString, ...]:
    """Store each vertex's natural ancestors with their graph distances."""
    require_connected(g)
    n = g.order
    if decomp.order != n:
        raise ValueError("decomposition does not match the graph")
    ordering = ordering or VertexOrdering.identity(n)
    pos = ordering.positions
    sorted_bags = [sorted(bag, key=lambda w: pos[w]) for bag in decomp.bags]
    header = write_gamma(n)
    cw, w = count_width(n), index_width(n)
    labels: list[BitString | None] = [None] * n
    for v, row in iter_distance_rows(g, np.arange(n)):
        own = decomp.vertex_to_node[v]
        ancestors: list[int] = []
        for t in decomp.node_path(v):
            bag = sorted_bags[t]
            ancestors.extend(bag if t != own else bag[:bag.index(v) + 1])
        parts = [header, write_fixed(len(ancestors), cw)]
        for a in ancestors:
            parts.append(write_fixed(int(pos[a]), w))
            parts.append(write_fixed(int(row[a]), w))
        labels[v] = BitString.concat(parts)
    return tuple(labels)


def sep_encode_graph(
    g: Graph, oracle: SeparatorOracle | None = None
) -> tuple[HierarchicalDecomposition, VertexOrdering, tuple[BitString, ...]]:
    """Decompose with ``oracle`` and label under the identity ordering."""
    decomp = build_separator_decomposition(g, oracle)
    ordering = VertexOrdering.identity(g.order)
    return decomp, ordering, sep_encode(g, decomp, ordering)


@lru_cache(maxsize=8192)
def sep_decode(label: BitString) -> HierLabelDecoded:
    cur = label.cursor()
    n = cur.read_gamma()
    a = cur.read_fixed(count_width(n))
    if not 1 <= a <= n:
        raise LabelDecodeError(f"ancestor count {a} outside 1..{n}")
    w = index_width(n)
    p, x = [], []
    for _ in range(a):
        p.append(cur.read_fixed(w) + 1)
        x.append(cur.read_fixed(w))
    if not cur.at_end():
        raise LabelDecodeError("trailing bits after the ancestor list")
    if max(p) > n or len(set(p)) != a:
        raise LabelDecodeError("ancestor indices must be distinct and within 1..n")
    if max(x) > n - 1:
        raise LabelDecodeError(f"distance exceeds {n - 1}")
    if x[-1] != 0:
        raise LabelDecodeError("distance to the labelled vertex itself is not zero")
    return HierLabelDecoded(tuple(p), tuple(x))
