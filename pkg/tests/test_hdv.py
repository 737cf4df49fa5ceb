import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isolabel.bits import BitString, LabelDecodeError, pack_trits, write_fixed, write_gamma
from isolabel.bounds import blue_ancestor_bound, hdv_label_bound
from isolabel.generators import complete_graph, cycle_graph, path_graph, random_graph, random_tree, star_graph
from isolabel.graph import RootedTree, components
from isolabel.hdv import dfs_hierarchical_decomposition, hdv_decode, hdv_encode, heavy_coloring, index_runs
from isolabel.hierarchy import HierLabelDecoded, hub_distance
from isolabel.trees import dfs_spanning_tree

from oracles import all_pairs


def test_coloring_of_a_path():
    c = heavy_coloring(dfs_spanning_tree(path_graph(5), 0))
    assert c.blue == (True, False, False, False, False)
    assert c.ordering.perm == (0, 1, 2, 3, 4)


def test_coloring_of_a_single_vertex():
    c = heavy_coloring(RootedTree(0, [-1]))
    assert c.blue == (True,) and c.ordering.perm == (0,)


def test_coloring_of_a_star():
    c = heavy_coloring(dfs_spanning_tree(star_graph(3), 0))
    assert c.blue == (True, False, True, True)
    assert c.heavy_child[0] == 1


def test_heavy_child_breaks_ties_by_smallest_id():
    # 0 has children 1 (subtree 2) and 2 (subtree 2)
    t = RootedTree(0, [-1, 0, 0, 1, 2])
    c = heavy_coloring(t)
    assert c.heavy_child[0] == 1
    assert c.ordering.perm == (0, 1, 3, 2, 4)


def test_decompositions_of_small_graphs():
    for g in (cycle_graph(4), complete_graph(4)):
        d = dfs_hierarchical_decomposition(g)
        assert [d.tree.parent_of(v) for v in range(4)] == [None, 0, 1, 2]
        assert d.uncovered_edges(g) == []
        assert all(len(b) == 1 for b in d.bags)
    tree = random_tree(20, 3)
    d = dfs_hierarchical_decomposition(tree)
    assert d.tree.as_graph() == tree


def test_path_label():
    ordering, labels = hdv_encode(path_graph(4))
    assert ordering.perm == (0, 1, 2, 3)
    d = hdv_decode(labels[3])
    assert (d.p, d.x) == ((1, 2, 3, 4), (3, 2, 1, 0))
    # gamma(4) | one run | run (1, 4) | d(v, root)=3 | trits (0, 0, 0)
    assert str(labels[3]) == "00100" + "001" + "00" + "11" + "11" + "00000"
    root = hdv_decode(labels[0])
    assert (root.p, root.x) == ((1,), (0,))
    assert hub_distance(hdv_decode(labels[0]), d) == 3


def test_star_labels():
    ordering, labels = hdv_encode(star_graph(3))
    for leaf in (1, 2, 3):
        d = hdv_decode(labels[leaf])
        assert d.p == (1, ordering.index_of(leaf)) and d.x == (1, 0)
    assert hub_distance(hdv_decode(labels[1]), hdv_decode(labels[2])) == 2


def test_index_runs():
    assert index_runs(np.array([1, 2, 3, 5, 7, 8])) == [(1, 3), (5, 5), (7, 8)]
    assert index_runs(np.array([], dtype=int)) == []


def _label(n, runs, root_dist, trits):
    w = max(1, (n - 1).bit_length())
    parts = [write_gamma(n), write_fixed(len(runs), n.bit_length())]
    for a, b in runs:
        parts += [write_fixed(a - 1, w), write_fixed(b - 1, w)]
    parts += [write_fixed(root_dist, w), pack_trits(trits)]
    return BitString.concat(parts)


def test_handmade_label_decodes():
    d = hdv_decode(_label(4, [(1, 2), (4, 4)], 1, [0, 1]))
    assert (d.p, d.x) == ((1, 2, 4), (1, 0, 0))


@pytest.mark.parametrize("label", [
    _label(4, [(1, 2), (4, 4)], 1, [2, 0]),          # last distance not zero
    _label(4, [(1, 2), (3, 4)], 1, [1, 1, 0]),       # adjacent runs not maximal
    _label(4, [(3, 4), (1, 1)], 1, [0, 1]),          # runs out of order
    _label(4, [(2, 1)], 1, [0]),                     # empty run
    _label(4, [(1, 1)], 1, []) + BitString.from_str("0"),  # trailing bit
    _label(4, [(1, 2)], 0, [0]),                     # negative distance
])
def test_decoder_rejects(label):
    with pytest.raises(LabelDecodeError):
        hdv_decode(label)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 50), st.floats(0.05, 0.9), st.integers(0, 10**6))
def test_roundtrip(n, p, seed):
    g = random_graph(n, p, seed)
    g, _ = g.induced_subgraph(components(g)[0])
    n = g.order
    dist = all_pairs(n, g.edges())
    ordering, labels = hdv_encode(g)
    decomp = dfs_hierarchical_decomposition(g)
    decoded = [hdv_decode(x) for x in labels]
    for v in range(n):
        anc = decomp.natural_ancestors(v, ordering)
        assert decoded[v].p == tuple(ordering.index_of(a) for a in anc)
        assert decoded[v].x == tuple(dist[v][a] for a in anc)
        assert len(labels[v]) <= hdv_label_bound(n)
        assert len(index_runs(np.array(decoded[v].p))) <= blue_ancestor_bound(n)
    for u in range(n):
        for v in range(u, n):
            assert hub_distance(decoded[u], decoded[v]) == dist[u][v]


def test_hub_distance_needs_a_shared_ancestor():
    with pytest.raises(ValueError):
        hub_distance(HierLabelDecoded((1,), (0,)), HierLabelDecoded((2,), (0,)))
