"""Flat distance-vector labels built from a spanning-tree tour.

Label layout (MSB first)::

    gamma(n) | d(v, v_1) in index_width(n) bits | n-1 sign bits | n-1 unary runs

where the signs and runs encode ``delta_i = d(v, v_i) - d(v, v_{i-1})`` for
``i = 2..n``.  A sign bit of 1 means negative; zero deltas carry sign 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bits import BitString, LabelDecodeError, encode_runs, write_fixed, write_gamma
from .bounds import index_width
from .graph import Graph, VertexOrdering, iter_distance_rows, require_connected
from .trees import dfs_spanning_tree, tour_ordering


@dataclass(frozen=True)
class DvCodebook:
    """Encode-time ordering plus the tour length it achieved."""

    ordering: VertexOrdering
    tour_length: int


def _dv_label(header: BitString, width: int, vec: np.ndarray) -> BitString:
    deltas = np.diff(vec.astype(np.int64))
    return BitString.concat((
        header,
        write_fixed(int(vec[0]), width),
        BitString.from_bits(deltas < 0),
        encode_runs(np.abs(deltas)),
    ))


def dv_encode(g: Graph) -> tuple[DvCodebook, tuple[BitString, ...]]:
    """Label every vertex of a connected graph; labels are indexed by vertex id."""
    require_connected(g)
    n = g.order
    ordering = tour_ordering(g, dfs_spanning_tree(g, 0))
    perm = np.asarray(ordering.perm, dtype=np.int64)
    pos = ordering.positions
    header = write_gamma(n)
    width = index_width(n)
    labels: list[BitString | None] = [None] * n
    tour_length = 0
    for v, row in iter_distance_rows(g, perm):
        vec = row[perm]
        labels[v] = _dv_label(header, width, vec)
        i = pos[v]
        if i + 1 < n:
            tour_length += int(vec[i + 1])
    return DvCodebook(ordering, tour_length), tuple(labels)


@lru_cache(maxsize=8192)
def dv_decode(label: BitString) -> tuple[int, ...]:
    """Recover ``(d(v, v_1), ..., d(v, v_n))`` from a label alone.

    Rejects anything the encoder could not have produced: trailing bits,
    a negative zero, entries outside ``0..n-1`` or not exactly one zero.
    """
    cur = label.cursor()
    n = cur.read_gamma()
    first = cur.read_fixed(index_width(n))
    signs = cur.read_bits(n - 1)
    mags = np.asarray(cur.read_runs(n - 1), dtype=np.int64)
    if not cur.at_end():
        raise LabelDecodeError("trailing bits after the last run")
    if np.any((mags == 0) & (signs == 1)):
        raise LabelDecodeError("negative sign on a zero delta")
    vec = np.empty(n, dtype=np.int64)
    vec[0] = first
    vec[1:] = first + np.cumsum(np.where(signs == 1, -mags, mags))
    if vec.min() < 0 or vec.max() > n - 1:
        raise LabelDecodeError("distance outside 0..n-1")
    if np.count_nonzero(vec == 0) != 1:
        raise LabelDecodeError("a distance vector has exactly one zero entry")
    return tuple(vec.tolist())


def dv_pairwise_distance(a: BitString, b: BitString) -> int:
    """``d(u, v)`` from the labels of ``u`` and ``v``.

    The index of ``u`` is where its own vector is zero; ``v``'s vector at
    that index is the distance.
    """
    da, db = dv_decode(a), dv_decode(b)
    if len(da) != len(db):
        raise ValueError("labels come from graphs of different order")
    return db[da.index(0)]
