from itertools import combinations, permutations

import networkx as nx
import pytest

from locdim.fragments import CATALOG, F1, F2, F3, F5, F6, classify_induced, enumerate_placements, fragment_class
from locdim.generators import friendship_graph, labeled_graphs, named_graph
from locdim.graph import Graph

from conftest import to_nx


def _induced(g, vs):
    return to_nx(g).subgraph(vs)


def test_catalog_shapes():
    degs = {cls.label: sorted(d for _, d in to_nx(cls.graph()).degree()) for cls in CATALOG}
    assert degs == {
        "F1": [2, 2, 3, 3], "F2": [1, 2, 2, 3], "F3": [2, 2, 2], "F4": [2, 2, 2, 2], "F5": [1, 1, 2, 2],
        "F6": [1, 1, 1, 3], "F7": [1, 1, 1, 1], "F8": [1, 1, 2], "F9": [1, 1], "F10": [0],
    }
    for cls in CATALOG:
        h = to_nx(cls.graph())
        assert h.number_of_edges() < cls.order * (cls.order - 1) // 2 or cls.order <= 3
        if cls.id != 10:
            assert min(d for _, d in h.degree()) >= 1


def test_diamond_role_degrees():
    g = F1.graph()
    deg = dict(to_nx(g).degree())
    assert deg[0] == deg[2] == 3 and deg[1] == deg[3] == 2  # a1, a3 hubs


def test_paw_role_degrees():
    deg = dict(to_nx(F2.graph()).degree())
    assert deg == {0: 2, 1: 3, 2: 1, 3: 2}  # b1, b2, b3, b4


def test_catalog_graphs_are_pairwise_nonisomorphic():
    for a, b in combinations(CATALOG, 2):
        assert not nx.is_isomorphic(to_nx(a.graph()), to_nx(b.graph()))


class TestClassify:
    def test_diamond(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
        p = classify_induced(g, (3, 1, 2, 0))
        assert p.cls_id == 1
        assert {p.role("a1"), p.role("a3")} == {0, 2}
        assert {p.role("a2"), p.role("a4")} == {1, 3}
        assert p.role_map == {"a1": 0, "a2": 1, "a3": 2, "a4": 3}

    def test_k4_is_not_a_fragment(self):
        assert classify_induced(named_graph("K4"), (0, 1, 2, 3)) is None

    def test_triangle_in_index_order(self):
        g = Graph.from_edges(10, [(5, 7), (7, 9), (5, 9)])
        p = classify_induced(g, (9, 5, 7))
        assert p.cls_id == 3 and p.role_map == {"c1": 5, "c2": 7, "c3": 9}

    def test_paw_roles(self):
        g = named_graph("paw")
        p = classify_induced(g, (0, 1, 2, 3))
        assert (p.role("b2"), p.role("b3")) == (1, 2)
        assert {p.role("b1"), p.role("b4")} == {0, 3}

    def test_star_centre_in_last_slot(self):
        p = classify_induced(named_graph("K1,3"), (0, 1, 2, 3))
        assert p.cls_id == 6 and p.vertices == (1, 2, 3, 0)

    def test_path_order(self):
        g = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
        assert classify_induced(g, (0, 1, 2, 3)).vertices == (1, 3, 0, 2)

    def test_isolated_vertex_rejected(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
        assert classify_induced(g, (0, 1, 2, 3)) is None

    @pytest.mark.parametrize("vs", [(0, 0, 1), (0, 9), (), (0, 1, 2, 3, 4)])
    def test_bad_vertex_tuples(self, vs):
        with pytest.raises(ValueError):
            classify_induced(named_graph("C5"), vs)

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_agrees_with_isomorphism_on_all_small_graphs(self, n):
        patterns = [(cls.id, to_nx(cls.graph())) for cls in CATALOG]
        # class of an induced subgraph depends only on its edge set, so one labeled graph per
        # 4-vertex pattern plus every 4-subset of a few n-vertex graphs covers the dispatch
        for g in list(labeled_graphs(n))[:: 97 if n == 6 else 1]:
            for vs in combinations(range(g.n), 4):
                sub = _induced(g, vs)
                want = next((cid for cid, h in patterns if nx.is_isomorphic(sub, h)), None)
                got = classify_induced(g, vs)
                assert (got.cls_id if got else None) == want
                if got is None:
                    complete = sub.number_of_edges() == 6
                    isolated = any(d == 0 for _, d in sub.degree())
                    assert complete or isolated

    def test_roles_form_a_class_isomorphism(self):
        for g in labeled_graphs(4):
            for k in (1, 2, 3, 4):
                for vs in combinations(range(4), k):
                    p = classify_induced(g, vs)
                    if p is None:
                        continue
                    for i, j in combinations(range(p.cls.order), 2):
                        in_class = (i, j) in p.cls.edges or (j, i) in p.cls.edges
                        assert g.has_edge(p.vertices[i], p.vertices[j]) == in_class

    def test_permutation_invariance(self):
        for g in labeled_graphs(4):
            base = classify_induced(g, (0, 1, 2, 3))
            for perm in permutations(range(4)):
                p = classify_induced(g, perm)
                assert p == base


class TestEnumerate:
    def test_c6_paths(self):
        out = enumerate_placements(named_graph("C6"), F5)
        assert len(out) == 6
        assert [p.sorted_vertices for p in out] == sorted(p.sorted_vertices for p in out)

    def test_k4_has_no_induced_diamond(self):
        assert enumerate_placements(named_graph("K4"), F1) == []

    def test_friendship_triangles(self):
        out = enumerate_placements(friendship_graph(2), F3)
        assert [p.vertices for p in out] == [(0, 1, 2), (0, 3, 4)]

    def test_allowed_restricts(self):
        out = enumerate_placements(named_graph("C6"), "P4", allowed=[0, 1, 2, 3, 4])
        assert [p.sorted_vertices for p in out] == [(0, 1, 2, 3), (1, 2, 3, 4)]

    @pytest.mark.parametrize("name", ["petersen", "C7", "friendship:3", "K3,3", "diamond", "P6"])
    def test_counts_match_brute_force(self, name):
        g = named_graph(name)
        h = to_nx(g)
        for cls in CATALOG:
            pattern = to_nx(cls.graph())
            want = sum(
                nx.is_isomorphic(h.subgraph(vs), pattern) for vs in combinations(range(g.n), cls.order)
            )
            assert len(enumerate_placements(g, cls)) == want

    def test_lookup(self):
        assert fragment_class("paw") is F2 and fragment_class("F6") is F6 and fragment_class(3) is F3
        with pytest.raises(KeyError):
            fragment_class("F11")


def test_iff_noncomplete_without_isolated_vertex_all_graphs_up_to_6():
    for n in range(4, 7):
        for g in labeled_graphs(n):
            for vs in combinations(range(n), 4):
                degs = [sum(g.has_edge(u, v) for v in vs if v != u) for u in vs]
                expected = sum(degs) < 12 and min(degs) > 0
                assert (classify_induced(g, vs) is not None) == expected
