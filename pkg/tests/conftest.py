from functools import lru_cache
from itertools import combinations

import networkx as nx
import pytest

from locdim import Graph, friendship_graph, labeled_graphs, named_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def brute_dim_l(g: Graph) -> int:
    """dim_l straight from the definition, using networkx distances."""
    h = to_nx(g)
    dist = dict(nx.all_pairs_shortest_path_length(h))
    edges = list(h.edges())
    for k in range(g.n + 1):
        for W in combinations(range(g.n), k):
            Ws = set(W)
            if all(
                u in Ws or v in Ws or any(dist[w][u] != dist[w][v] for w in W)
                for u, v in edges
            ):
                return k
    raise AssertionError


@lru_cache(maxsize=None)
def connected_k4_free(n: int) -> tuple[Graph, ...]:
    return tuple(labeled_graphs(n, forbid=4, connected=True))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(labeled_graphs(n, connected=True))


@pytest.fixture
def diamond():
    return named_graph("diamond")


@pytest.fixture
def friendship():
    return friendship_graph


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
