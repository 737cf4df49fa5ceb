"""Hierarchical decompositions, natural ancestor orderings and hub queries."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .graph import Graph, RootedTree, VertexOrdering


@dataclass(frozen=True)
class HierarchicalDecomposition:
    """Rooted tree of bags partitioning the vertex set.

    ``tree`` is over node ids ``0..len(bags)-1``; ``bags[t]`` is a sorted
    tuple of vertices and ``vertex_to_node[v]`` the node whose bag holds ``v``.
    """

    tree: RootedTree
    bags: tuple[tuple[int, ...], ...]
    vertex_to_node: tuple[int, ...]

    @classmethod
    def from_bags(cls, tree: RootedTree, bags: Sequence[Sequence[int]]) -> "HierarchicalDecomposition":
        n = sum(len(b) for b in bags)
        owner = [-1] * n
        for t, bag in enumerate(bags):
            if not bag:
                raise ValueError(f"bag {t} is empty")
            for v in bag:
                if not 0 <= v < n or owner[v] != -1:
                    raise ValueError("bags do not partition 0..n-1")
                owner[v] = t
        return cls(tree, tuple(tuple(sorted(b)) for b in bags), tuple(owner))

    @property
    def order(self) -> int:
        return len(self.vertex_to_node)

    def node_path(self, v: int) -> list[int]:
        """Nodes from the root down to the bag of ``v``."""
        return self.tree.root_path(self.vertex_to_node[v])

    def depth(self) -> int:
        """Number of nodes on the longest root-to-leaf path."""
        return int(self.tree.depth.max()) + 1 if self.tree.order else 0

    def natural_ancestors(self, v: int, ordering: VertexOrdering) -> list[int]:
        """Ancestors of ``v`` bag by bag from the root, ending with ``v``."""
        pos = ordering.positions
        own = self.vertex_to_node[v]
        out: list[int] = []
        for t in self.node_path(v):
            bag = sorted(self.bags[t], key=lambda w: pos[w])
            if t == own:
                bag = [w for w in bag if pos[w] <= pos[v]]
            out.extend(bag)
        return out

    def is_vertex_ancestor(self, u: int, v: int) -> bool:
        """Whether ``u``'s bag is an ancestor bag of ``v``'s bag."""
        return self.tree.is_ancestor(self.vertex_to_node[u], self.vertex_to_node[v])

    def uncovered_edges(self, g: Graph) -> list[tuple[int, int]]:
        """Edges whose endpoints are not in ancestor-related bags."""
        return [
            (u, w) for u, w in g.edges()
            if not (self.is_vertex_ancestor(u, w) or self.is_vertex_ancestor(w, u))
        ]

    def validate(self, g: Graph) -> None:
        if self.order != g.order:
            raise ValueError("decomposition does not cover the graph's vertices")
        bad = self.uncovered_edges(g)
        if bad:
            raise ValueError(f"edge {bad[0]} joins bags that are not ancestor-related")


@dataclass(frozen=True)
class HierLabelDecoded:
    """Decoded hierarchical label: ancestor indices ``p`` and distances ``x``."""

    p: tuple[int, ...]
    x: tuple[int, ...]

    @cached_property
    def p_array(self) -> np.ndarray:
        return np.asarray(self.p, dtype=np.int64)

    @cached_property
    def x_array(self) -> np.ndarray:
        return np.asarray(self.x, dtype=np.int64)


def common_prefix_length(a: np.ndarray, b: np.ndarray) -> int:
    k = min(a.size, b.size)
    diff = np.flatnonzero(a[:k] != b[:k])
    return int(diff[0]) if diff.size else k


def hub_distance(a: HierLabelDecoded, b: HierLabelDecoded) -> int:
    """Distance from two decoded labels: min over shared ancestors of x_a + x_b."""
    c = common_prefix_length(a.p_array, b.p_array)
    if c == 0:
        raise ValueError("labels share no ancestor; they come from different graphs")
    return int((a.x_array[:c] + b.x_array[:c]).min())
