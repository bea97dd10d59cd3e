import networkx as nx
import pytest

from locdim.generators import friendship_graph, labeled_graphs, named_graph, random_k4_free
from locdim.graph import clique_number, has_k4, is_connected

from conftest import to_nx


@pytest.mark.parametrize("k", range(1, 7))
def test_friendship(k):
    g = friendship_graph(k)
    assert g.n == 2 * k + 1 and g.m == 3 * k
    assert is_connected(g) and clique_number(g) == 3
    assert g.degree(0) == 2 * k
    if k > 1:
        assert nx.is_isomorphic(to_nx(g), nx.windmill_graph(k, 3))


def test_friendship_rejects_zero():
    with pytest.raises(ValueError):
        friendship_graph(0)


def test_random_never_has_k4():
    for seed in range(1000):
        n = 4 + seed % 9
        g = random_k4_free(n, 0.3 + (seed % 7) / 10, seed)
        assert not has_k4(g) and is_connected(g), seed


def test_random_triangle_free():
    for seed in range(300):
        g = random_k4_free(8, 0.6, seed, forbid=3)
        assert clique_number(g) <= 2 and is_connected(g)


def test_random_is_deterministic():
    assert random_k4_free(12, 0.4, 99) == random_k4_free(12, 0.4, 99)
    assert any(random_k4_free(12, 0.4, s) != random_k4_free(12, 0.4, 99) for s in range(5))


def test_random_edge_cases():
    assert random_k4_free(1, 0.5, 0).n == 1
    for seed in range(50):
        g = random_k4_free(4, 1.0, seed)
        assert g.m == 5 and not has_k4(g)
    with pytest.raises(ValueError):
        random_k4_free(0, 0.5, 0)
    with pytest.raises(ValueError):
        random_k4_free(5, 1.5, 0)


@pytest.mark.parametrize(
    "name, ref",
    [
        ("C7", nx.cycle_graph(7)),
        ("P5", nx.path_graph(5)),
        ("K5", nx.complete_graph(5)),
        ("K1,4", nx.star_graph(4)),
        ("star:3", nx.star_graph(3)),
        ("K2,3", nx.complete_bipartite_graph(2, 3)),
        ("petersen", nx.petersen_graph()),
        ("diamond", nx.complete_multipartite_graph(1, 1, 2)),
        ("friendship:3", nx.windmill_graph(3, 3)),
    ],
)
def test_named(name, ref):
    assert nx.is_isomorphic(to_nx(named_graph(name)), ref)


@pytest.mark.parametrize("name", ["C2", "F11", "Q5", "", "wheel"])
def test_unknown_name(name):
    with pytest.raises((KeyError, ValueError)):
        named_graph(name)


def test_unknown_name_lists_known():
    with pytest.raises(KeyError, match="petersen"):
        named_graph("wheel")


# OEIS A001187 (connected labeled graphs) and A006125 (all labeled graphs)
@pytest.mark.parametrize("n, total, connected", [(1, 1, 1), (2, 2, 1), (3, 8, 4), (4, 64, 38), (5, 1024, 728)])
def test_labeled_counts(n, total, connected):
    assert sum(1 for _ in labeled_graphs(n)) == total
    assert sum(1 for _ in labeled_graphs(n, connected=True)) == connected


@pytest.mark.parametrize("n, count", [(4, 37), (5, 667), (6, 21958)])
def test_connected_k4_free_counts(n, count):
    graphs = list(labeled_graphs(n, forbid=4, connected=True))
    assert len(graphs) == count
    if n <= 5:
        assert sum(1 for g in labeled_graphs(n, connected=True) if not has_k4(g)) == count


def test_labeled_graphs_distinct():
    graphs = list(labeled_graphs(5, forbid=3))
    assert len({g.edges for g in graphs}) == len(graphs)
    assert all(clique_number(g) <= 2 for g in graphs)
