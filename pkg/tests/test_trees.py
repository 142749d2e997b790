"""Tests for the host graph G^d and the tree families built on it."""

import networkx as nx
import numpy as np
import pytest

from src.generators.families import family
from src.models.certificate import CheckVerdict
from src.models.errors import DimOutOfRangeError, HypothesesNotVerifiedError
from src.trees.host_graph import alpha, graph_G, mu, sigma
from src.trees.tree_family import TreeVariant, complex_from_family, facet_correspondence, tree_family, verify_family


@pytest.fixture(scope="module")
def host2():
    return graph_G(2)


@pytest.fixture(scope="module")
def t1_2():
    return tree_family(2, TreeVariant.T1)


class TestHostGraph:

    def test_d2_size(self, host2):
        assert host2.number_of_vertices() == 76
        assert host2.number_of_edges() == 95

    @pytest.mark.slow
    def test_d4_size(self):
        G = graph_G(4)
        assert G.number_of_vertices() == 246
        assert G.number_of_edges() == 287

    def test_paths(self, host2):
        path = host2.path(3)
        assert path == [sigma(3, 19), alpha(1, 3, 19), alpha(2, 3, 19), mu(3, 19)]
        assert all(host2.has_edge(u, v) for u, v in zip(path, path[1:]))

    def test_cubic_apart_from_paths(self, host2):
        degrees = dict(host2.graph.degree())
        assert degrees[sigma(0, 19)] == 3
        assert degrees[alpha(1, 0, 19)] == 2

    def test_to_dict(self, host2):
        data = host2.to_dict()
        assert data["n"] == 19
        assert len(data["edges"]) == 95
        assert "sigma_0" in data["vertices"]

    def test_dimension_guard(self):
        with pytest.raises(DimOutOfRangeError):
            graph_G(1)


class TestTreeFamily:

    @pytest.mark.parametrize("variant", [TreeVariant.T1, TreeVariant.T2])
    @pytest.mark.parametrize("d", [2, 3])
    def test_members_are_trees(self, d, variant):
        T = tree_family(d, variant)
        n = T.host.n
        assert len(T.members) == n
        for i in range(n):
            assert len(T.members[i]) == n - d - 1
            assert nx.is_tree(T.member_graph(i))

    @pytest.mark.parametrize("variant", ["T1", "T2"])
    def test_hypotheses_hold(self, variant):
        T = tree_family(3, variant)
        certificate = verify_family(T.host, T, 4)
        assert certificate.passed
        assert [c.name for c in certificate.checks] == [
            "induced-trees", "pairwise-intersecting", "membership-count", "edge-intersections",
        ]

    def test_wrong_dimension_fails(self, host2, t1_2):
        certificate = verify_family(host2, t1_2, 2)
        assert certificate.verdict is CheckVerdict.FAIL

    def test_hat_distance_along_edges(self, t1_2):
        n = 19
        assert t1_2.hat_distance(sigma(0, n), sigma(1, n)) == 1
        assert t1_2.hat_distance(sigma(0, n), alpha(1, 0, n)) == 1
        assert t1_2.hat_distance(sigma(0, n), mu(7, n)) > 1

    def test_to_dict(self, t1_2):
        data = t1_2.to_dict()
        assert data["variant"] == "T1"
        assert len(data["members"]) == 19


class TestComplexFromFamily:

    def test_t1_gives_m_filling(self, host2, t1_2, m2):
        assert complex_from_family(host2, t1_2) == m2.filling

    def test_t2_gives_n_filling(self, host2, n2):
        assert complex_from_family(host2, tree_family(2, TreeVariant.T2)) == n2.filling

    def test_facet_correspondence(self, host2, t1_2, m2):
        facets = facet_correspondence(host2, t1_2)
        assert facets[sigma(0, 19)] == (0, 16, 17, 18)
        assert facets[mu(0, 19)] == (0, 4, 9, 14)
        assert set(facets.values()) == set(m2.filling.facets)

    def test_truncated_family_is_refused(self, host2, t1_2):
        broken = t1_2.truncated(0, sigma(0, 19))
        with pytest.raises(HypothesesNotVerifiedError):
            complex_from_family(host2, broken)


def dims(low, high, slow_from=4):
    return [pytest.param(d, marks=pytest.mark.slow) if d >= slow_from else d for d in range(low, high + 1)]


class TestHatSets:

    @pytest.mark.parametrize("d", dims(2, 5))
    def test_closed_forms_for_t1(self, d):
        T = tree_family(d, TreeVariant.T1)
        n = T.host.n
        for m in range(n):
            assert T.hat_set(sigma(m, n)) == frozenset((m - k) % n for k in range(d + 2))
            assert T.hat_set(mu(m, n)) == frozenset((m - k * (d + 3)) % n for k in range(d + 2))

    @pytest.mark.parametrize("variant", [TreeVariant.T1, TreeVariant.T2])
    @pytest.mark.parametrize("d", [2, 3])
    def test_hat_sets_have_d_plus_2_elements(self, d, variant):
        T = tree_family(d, variant)
        assert all(len(s) == d + 2 for s in T.hat_sets().values())

    @pytest.mark.parametrize("d", dims(2, 5))
    def test_every_member_meets_the_first(self, d):
        T = tree_family(d, TreeVariant.T1)
        assert all(T.members[i] & T.members[0] for i in range(T.host.n))

    @pytest.mark.parametrize("d", [2, 3])
    def test_hat_distance_is_a_metric(self, d):
        T = tree_family(d, TreeVariant.T1)
        vertices = T.host.vertices
        rng = np.random.default_rng(4)
        for _ in range(2000):
            u, v, w = (vertices[int(i)] for i in rng.choice(len(vertices), size=3, replace=False))
            assert T.hat_distance(u, w) <= T.hat_distance(u, v) + T.hat_distance(v, w)
            assert T.hat_distance(u, v) == T.hat_distance(v, u) > 0

    def test_distinct_host_vertices_have_distinct_hats(self, t1_2):
        hats = list(t1_2.hat_sets().values())
        assert len(set(hats)) == len(hats)


class TestFamiliesAcrossDimensions:

    @pytest.mark.parametrize("variant", [TreeVariant.T1, TreeVariant.T2])
    @pytest.mark.parametrize("d", dims(2, 5))
    def test_hypotheses_hold(self, d, variant):
        T = tree_family(d, variant)
        assert verify_family(T.host, T, d + 1).passed

    @pytest.mark.parametrize("variant,name", [(TreeVariant.T1, "M"), (TreeVariant.T2, "N")])
    @pytest.mark.parametrize("d", dims(2, 5))
    def test_complex_matches_family_filling(self, d, variant, name):
        T = tree_family(d, variant)
        assert complex_from_family(T.host, T) == family(name, d).filling

    @pytest.mark.parametrize("variant", [TreeVariant.T1, TreeVariant.T2])
    def test_dual_graph_is_the_host_graph(self, host2, variant):
        T = tree_family(2, variant)
        dual = complex_from_family(host2, T).dual_graph().to_networkx()
        assert nx.is_isomorphic(dual, host2.graph)
