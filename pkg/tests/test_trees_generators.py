import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isolabel.generators import (
    complete_graph,
    cycle_graph,
    enumerate_all_graphs,
    enumerate_connected_graphs,
    path_graph,
    random_graph,
    random_tree,
    star_graph,
)
from isolabel.graph import DisconnectedGraphError, Graph, RootedTree, bfs_distances
from isolabel.trees import dfs_spanning_tree, tour_ordering, tree_centroid

from oracles import brute_force_connected_count, dfs_parents


def parents(t):
    return [t.parent_of(v) for v in range(t.order)]


def test_dfs_tree_examples():
    assert parents(dfs_spanning_tree(cycle_graph(4), 0)) == [None, 0, 1, 2]
    assert parents(dfs_spanning_tree(complete_graph(4), 0)) == [None, 0, 1, 2]
    tree = random_tree(30, 1)
    t = dfs_spanning_tree(tree, 5)
    assert t.as_graph() == tree


def test_dfs_tree_needs_connected_graph():
    with pytest.raises(DisconnectedGraphError):
        dfs_spanning_tree(Graph.empty(2), 0)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 40), st.floats(0.05, 0.6), st.integers(0, 10**6))
def test_dfs_tree_matches_recursive_dfs(n, p, seed):
    g = random_graph(n, p, seed)
    comp = nx.node_connected_component(nx.Graph(list(g.edges()) + [(0, 0)]), 0) if g.size else {0}
    if len(comp) != n:
        return
    t = dfs_spanning_tree(g, 0)
    assert parents(t) == dfs_parents(n, g.edges())
    # every non-tree edge joins an ancestor and a descendant
    for u, v in g.edges():
        assert t.is_ancestor(u, v) or t.is_ancestor(v, u)


def test_tour_ordering_examples():
    g = path_graph(3)
    assert tour_ordering(g, dfs_spanning_tree(g, 0)).perm == (0, 1, 2)
    star = star_graph(3)
    order = tour_ordering(star, dfs_spanning_tree(star, 0)).perm
    assert order == (0, 1, 2, 3)
    assert sum(bfs_distances(star, a)[b] for a, b in zip(order, order[1:])) == 5
    assert tour_ordering(Graph.empty(1), RootedTree(0, [-1])).perm == (0,)


def test_tour_ordering_rejects_foreign_tree():
    with pytest.raises(ValueError):
        tour_ordering(path_graph(3), RootedTree(0, [-1, 0, 0]))


def test_centroid_examples():
    assert tree_centroid(path_graph(3)) == 1
    assert tree_centroid(star_graph(4)) == 0
    assert tree_centroid(path_graph(4)) == 1
    with pytest.raises(ValueError):
        tree_centroid(cycle_graph(4))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 80), st.integers(0, 10**6))
def test_centroid_is_smallest_balanced_vertex(n, seed):
    tree = random_tree(n, seed)
    h = nx.Graph(tree.edges())
    h.add_nodes_from(range(n))

    def balanced(c):
        rest = h.copy()
        rest.remove_node(c)
        return all(2 * len(comp) <= n for comp in nx.connected_components(rest))

    assert tree_centroid(tree) == min(c for c in range(n) if balanced(c))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
def test_connected_counts(n, count):
    graphs = list(enumerate_connected_graphs(n))
    assert len(graphs) == count == brute_force_connected_count(n)
    assert len(set(graphs)) == count


def test_all_graph_count():
    assert len(list(enumerate_all_graphs(4))) == 64
    with pytest.raises(ValueError):
        next(enumerate_connected_graphs(8))


def test_random_graph_extremes_and_determinism():
    assert random_graph(5, 1.0, 0) == complete_graph(5)
    assert random_graph(5, 0.0, 0).size == 0
    assert random_graph(200, 0.1, 7) == random_graph(200, 0.1, 7)
    assert random_graph(200, 0.1, 7) != random_graph(200, 0.1, 8)


def test_random_graph_density():
    g = random_graph(2000, 0.01, 0)
    expected = 0.01 * 2000 * 1999 / 2
    assert abs(g.size - expected) < 5 * expected**0.5


def test_random_tree_is_tree():
    for seed in range(5):
        t = random_tree(300, seed)
        assert t.size == 299 and nx.is_tree(nx.Graph(t.edges()))
    assert random_tree(1, 0).order == 1


def test_random_graph_tiny_probability_terminates():
    assert random_graph(50, 5e-324, 0).size == 0
    assert random_graph(50, 1e-300, 1).size == 0
