import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isolabel.bits import BitString, LabelDecodeError, write_fixed, write_gamma
from isolabel.bounds import separator_depth_bound, sep_tree_label_bound
from isolabel.generators import complete_graph, cycle_graph, path_graph, random_graph, random_tree
from isolabel.graph import Graph, VertexOrdering, components
from isolabel.hierarchy import hub_distance
from isolabel.separator import (
    AutoOracle,
    BfsLayerOracle,
    CentroidOracle,
    OracleContractError,
    SeparatorOracle,
    SeparatorParts,
    build_separator_decomposition,
    check_separator,
    sep_decode,
    sep_encode,
    sep_encode_graph,
    split_components,
)

from oracles import all_pairs


def test_single_vertex():
    d = build_separator_decomposition(Graph.empty(1), CentroidOracle())
    assert d.bags == ((0,),)


def test_path_of_three():
    g = path_graph(3)
    d = build_separator_decomposition(g, CentroidOracle())
    assert d.bags[0] == (1,)
    assert sorted(d.bags[1:]) == [(0,), (2,)]
    labels = sep_encode(g, d, VertexOrdering.identity(3))
    v0 = sep_decode(labels[0])
    assert (v0.p, v0.x) == ((2, 1), (1, 0))
    root = sep_decode(labels[1])
    assert (root.p, root.x) == ((2,), (0,))


def test_depth_on_random_trees():
    assert separator_depth_bound(1000) == 19
    for seed in range(5):
        d = build_separator_decomposition(random_tree(1000, seed), CentroidOracle())
        assert d.depth() <= separator_depth_bound(1000)


def test_split_components_balance():
    # star minus its centre: five singletons, split 3 / 2
    g = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    parts = split_components(g, [0])
    assert parts.S == (0,)
    assert sorted(map(len, (parts.X, parts.Y))) == [2, 3]


@pytest.mark.parametrize("g", [cycle_graph(9), complete_graph(5), random_graph(60, 0.1, 2), path_graph(10)])
def test_layer_oracle_meets_contract(g):
    for oracle in (BfsLayerOracle(), AutoOracle()):
        parts = oracle(g)
        check_separator(g, parts, oracle.size_bound(g.order))


def test_centroid_oracle_needs_a_forest():
    with pytest.raises(ValueError):
        CentroidOracle()(cycle_graph(4))


class _Fixed(SeparatorOracle):
    def __init__(self, parts, order=3):
        self.parts = parts
        self.order = order

    def __call__(self, g):
        return self.parts if g.order == self.order else AutoOracle()(g)


def test_contract_violations_are_reported():
    g = path_graph(3)
    with pytest.raises(OracleContractError, match="joins X and Y"):
        build_separator_decomposition(g, _Fixed(SeparatorParts((2,), (0,), (1,))))
    with pytest.raises(OracleContractError, match="partition"):
        build_separator_decomposition(g, _Fixed(SeparatorParts((1,), (0,), (0, 2))))
    with pytest.raises(OracleContractError, match="2n/3"):
        build_separator_decomposition(Graph.empty(4), _Fixed(SeparatorParts((0,), (1, 2, 3), ()), order=4))


def test_empty_separator_is_repaired():
    g = Graph.empty(3)
    d = build_separator_decomposition(g, _Fixed(SeparatorParts((), (0, 1), (2,))))
    assert d.bags[0] == (0,)


def test_decoder_rejects_bad_labels():
    def label(n, pairs):
        w = max(1, (n - 1).bit_length())
        parts = [write_gamma(n), write_fixed(len(pairs), n.bit_length())]
        for i, x in pairs:
            parts += [write_fixed(i - 1, w), write_fixed(x, w)]
        return BitString.concat(parts)

    assert sep_decode(label(3, [(2, 1), (1, 0)])).p == (2, 1)
    for bad in (label(3, [(2, 1), (1, 1)]), label(3, [(2, 1), (2, 0)]), label(3, [(4, 1), (1, 0)]),
                label(3, [(2, 0)]) + BitString.from_str("1"), label(3, [])):
        with pytest.raises(LabelDecodeError):
            sep_decode(bad)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 60), st.integers(0, 10**6))
def test_tree_labels_roundtrip_within_bound(n, seed):
    g = random_tree(n, seed)
    d, ordering, labels = sep_encode_graph(g, CentroidOracle())
    assert d.uncovered_edges(g) == []
    assert all(len(b) == 1 for b in d.bags)
    dist = all_pairs(n, g.edges())
    decoded = [sep_decode(x) for x in labels]
    for v in range(n):
        anc = d.natural_ancestors(v, ordering)
        assert decoded[v].x == tuple(dist[v][a] for a in anc)
        assert len(labels[v]) <= sep_tree_label_bound(n)
    for u in range(n):
        for v in range(n):
            assert hub_distance(decoded[u], decoded[v]) == dist[u][v]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 40), st.floats(0.05, 0.8), st.integers(0, 10**6))
def test_general_graph_labels_roundtrip(n, p, seed):
    g = random_graph(n, p, seed)
    g, _ = g.induced_subgraph(components(g)[0])
    d, _, labels = sep_encode_graph(g)
    assert d.uncovered_edges(g) == []
    dist = all_pairs(g.order, g.edges())
    decoded = [sep_decode(x) for x in labels]
    for u in range(g.order):
        for v in range(g.order):
            assert hub_distance(decoded[u], decoded[v]) == dist[u][v]
