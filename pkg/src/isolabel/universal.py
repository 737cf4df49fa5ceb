"""Isometric-universal graphs assembled from decoded labels.

Two label vertices of a flat scheme are adjacent when their vectors have the
same length and differ by exactly 1 in L-infinity norm.  Two vertices of a
hierarchical scheme are adjacent when one ancestor-index vector is a prefix
of the other and the distance vectors are at L-infinity pseudodistance 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .bits import BitString, LabelDecodeError
from .graph import INF, Graph, bfs_distances, components, distance_rows
from .hierarchy import HierLabelDecoded
from .schemes import get_scheme

FULL_UNIVERSAL_MAX_BITS = 14


class EmbeddingError(ValueError):
    """An embedding is not injective, out of range, or cannot be formed."""


def linf_pseudodistance(x: Sequence, y: Sequence) -> float:
    """Max ``|x_i - y_i|`` over the common prefix, with ``inf - inf = 0``."""
    best = 0
    for a, b in zip(x, y):
        if a == b:
            continue
        d = abs(a - b)
        if d > best:
            best = d
    return best


def dv_adjacent(da: Sequence, db: Sequence) -> bool:
    return len(da) == len(db) and linf_pseudodistance(da, db) == 1


def hdv_vertex_valid(d: HierLabelDecoded) -> bool:
    return len(d.p) == len(d.x) >= 1 and d.x[-1] == 0


def hdv_adjacent(d1: HierLabelDecoded, d2: HierLabelDecoded) -> bool:
    k = min(len(d1.p), len(d2.p))
    return d1.p[:k] == d2.p[:k] and linf_pseudodistance(d1.x, d2.x) == 1


@dataclass(frozen=True)
class UniversalGraph:
    """A graph on label vertices plus the embedding of each source graph.

    ``embeddings[i]`` maps vertex ``v`` of ``members[i]`` to its universal
    vertex.  A disjoint union keeps its ``parts`` and their vertex
    ``offsets`` so further graphs can be embedded component by component.
    """

    graph: Graph
    labels: tuple[BitString, ...]
    payloads: tuple
    scheme: str
    members: tuple[Graph, ...] = ()
    embeddings: tuple[tuple[int, ...], ...] = ()
    parts: tuple["UniversalGraph", ...] = ()
    offsets: tuple[int, ...] = field(default=())

    @cached_property
    def vertex_of(self) -> dict[BitString, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def order(self) -> int:
        return self.graph.order


@dataclass(frozen=True)
class IsometryReport:
    passed: bool
    pairs_checked: int
    worst_pair: tuple | None = None  # (graph id, u, v, d_G, d_H)


def _pairs_within(groups: Iterable[list[int]], vectors: Sequence[Sequence[int]], budget: int = 1 << 22):
    """Adjacent pairs among equal-length integer vectors: L-inf distance exactly 1."""
    us, vs = [], []
    for ids in groups:
        if len(ids) < 2:
            continue
        mat = np.asarray([vectors[i] for i in ids], dtype=np.float64)
        ids_arr = np.asarray(ids, dtype=np.int64)
        block = max(1, budget // (len(ids) * max(1, mat.shape[1])))
        for start in range(0, len(ids), block):
            diff = np.abs(mat[start:start + block, None, :] - mat[None, :, :])
            diff[np.isnan(diff)] = 0.0  # inf - inf
            hit = np.argwhere(diff.max(axis=2) == 1)
            hit = hit[hit[:, 0] + start < hit[:, 1]]
            us.append(ids_arr[hit[:, 0] + start])
            vs.append(ids_arr[hit[:, 1]])
    if not us:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(us), np.concatenate(vs)


def _flat_edges(payloads: Sequence[tuple]):
    by_length: dict[int, list[int]] = {}
    for i, vec in enumerate(payloads):
        by_length.setdefault(len(vec), []).append(i)
    return _pairs_within(by_length.values(), payloads)


def _hierarchical_edges(payloads: Sequence[HierLabelDecoded]):
    by_p: dict[tuple[int, ...], list[int]] = {}
    for i, d in enumerate(payloads):
        by_p.setdefault(d.p, []).append(i)
    us, vs = [], []
    for i, d in enumerate(payloads):
        for k in range(1, len(d.p) + 1):
            for j in by_p.get(d.p[:k], ()):
                # equal p vectors are handled once, from the smaller id
                if k == len(d.p) and j <= i:
                    continue
                if linf_pseudodistance(d.x, payloads[j].x) == 1:
                    us.append(i)
                    vs.append(j)
    return us, vs


def _assemble(labels: list[BitString], payloads: list, scheme: str, **extra) -> UniversalGraph:
    if get_scheme(scheme).hierarchical:
        us, vs = _hierarchical_edges(payloads)
    else:
        us, vs = _flat_edges(payloads)
    graph = Graph.from_edge_arrays(len(labels), us, vs)
    return UniversalGraph(graph, tuple(labels), tuple(payloads), scheme, **extra)


def build_realized_universal(graphs: Iterable[Graph], scheme: str) -> UniversalGraph:
    """Universal graph induced on the labels realized by ``graphs``.

    Vertices are the distinct labels; the adjacency rule is the scheme's.
    """
    s = get_scheme(scheme)
    labels: list[BitString] = []
    payloads: list = []
    index: dict[BitString, int] = {}
    members: list[Graph] = []
    embeddings: list[tuple[int, ...]] = []
    for g in graphs:
        _, encoded = s.encode(g)
        emb = []
        for label in encoded:
            vid = index.get(label)
            if vid is None:
                try:
                    payload = s.decode(label)
                except LabelDecodeError as exc:
                    raise ValueError(f"label does not decode under scheme {scheme!r}: {exc}") from None
                vid = index[label] = len(labels)
                labels.append(label)
                payloads.append(payload)
            emb.append(vid)
        members.append(g)
        embeddings.append(tuple(emb))
    return _assemble(labels, payloads, scheme, members=tuple(members), embeddings=tuple(embeddings))


def build_full_universal(k: int, scheme: str) -> UniversalGraph:
    """Universal graph on every bit string of length at most ``k`` that decodes."""
    if not 0 <= k <= FULL_UNIVERSAL_MAX_BITS:
        raise ValueError(f"bit budget must be in 0..{FULL_UNIVERSAL_MAX_BITS}, got {k}")
    s = get_scheme(scheme)
    labels: list[BitString] = []
    payloads: list = []
    for length in range(k + 1):
        for value in range(1 << length):
            z = BitString(value, length)
            try:
                payload = s.decode(z)
            except LabelDecodeError:
                continue
            if s.hierarchical and not hdv_vertex_valid(payload):
                continue
            labels.append(z)
            payloads.append(payload)
    return _assemble(labels, payloads, scheme)


def embed_labels(g: Graph, h: UniversalGraph) -> tuple[int, ...]:
    """Embedding of a connected ``g`` by looking up its labels in ``h``."""
    _, labels = get_scheme(h.scheme).encode(g)
    try:
        return tuple(h.vertex_of[label] for label in labels)
    except KeyError:
        raise EmbeddingError("a label of the graph is not a vertex of the universal graph") from None


def _as_dist(d) -> float:
    return INF if d < 0 else int(d)


def verify_isometric(g: Graph, h: UniversalGraph | Graph, embedding: Sequence[int], graph_id: int = 0) -> IsometryReport:
    """Compare BFS distances in ``g`` with distances between images in ``h``."""
    host = h.graph if isinstance(h, UniversalGraph) else h
    emb = [int(v) for v in embedding]
    if len(emb) != g.order:
        raise EmbeddingError(f"embedding has {len(emb)} images for {g.order} vertices")
    if len(set(emb)) != len(emb):
        raise EmbeddingError("embedding is not injective")
    if emb and (min(emb) < 0 or max(emb) >= host.order):
        raise EmbeddingError("embedding image out of range")
    if not emb:
        return IsometryReport(True, 0)
    dh_rows = distance_rows(host, emb)
    worst = None
    worst_gap = 0.0
    checked = 0
    for u in range(g.order):
        dg = bfs_distances(g, u)
        for v in range(u + 1, g.order):
            checked += 1
            d_g = dg[v]
            d_h = _as_dist(dh_rows[u, emb[v]])
            adjacent_g = d_g == 1
            adjacent_h = host.has_edge(emb[u], emb[v])
            if d_g != d_h or adjacent_g != adjacent_h:
                gap = 0.0 if d_g == d_h else abs(d_g - d_h)
                if worst is None or gap > worst_gap:
                    worst, worst_gap = (graph_id, u, v, d_g, d_h), gap
    return IsometryReport(worst is None, checked, worst)


def verify_members(h: UniversalGraph) -> list[IsometryReport]:
    return [verify_isometric(g, h, emb, i) for i, (g, emb) in enumerate(zip(h.members, h.embeddings))]


def disjoint_union_universal(parts: Sequence[UniversalGraph]) -> UniversalGraph:
    """Disjoint union; copy ``i`` occupies ``offsets[i] .. offsets[i] + |V(parts[i])| - 1``."""
    if not parts:
        return UniversalGraph(Graph.empty(0), (), (), "dv")
    scheme = parts[0].scheme
    if any(p.scheme != scheme for p in parts):
        raise ValueError("all parts must use the same scheme")
    offsets, us, vs, labels, payloads = [], [], [], [], []
    total = 0
    for part in parts:
        offsets.append(total)
        edges = np.asarray(part.graph.edges(), dtype=np.int64).reshape(-1, 2)
        us.append(edges[:, 0] + total)
        vs.append(edges[:, 1] + total)
        labels.extend(part.labels)
        payloads.extend(part.payloads)
        total += part.order
    graph = Graph.from_edge_arrays(total, np.concatenate(us), np.concatenate(vs))
    return UniversalGraph(graph, tuple(labels), tuple(payloads), scheme, parts=tuple(parts), offsets=tuple(offsets))


def embed_disjoint(g: Graph, union: UniversalGraph) -> tuple[int, ...]:
    """Send the ``i``-th component of ``g`` (by smallest vertex) into copy ``i``."""
    comps = components(g)
    if len(comps) > len(union.parts):
        raise EmbeddingError(f"{len(comps)} components but only {len(union.parts)} copies")
    emb = [0] * g.order
    for i, comp in enumerate(comps):
        sub, back = g.induced_subgraph(comp)
        local = embed_labels(sub, union.parts[i])
        for lv, v in enumerate(back):
            emb[v] = local[lv] + union.offsets[i]
    return tuple(emb)
