"""Tests for standard complexes, the M and N families and sphere bundles."""

import pytest

from src.generators.families import FacetKind, FacetLabel, connecting_ridges, family, family_M, family_N, family_size
from src.generators.handles import all_permutations, parse_permutation, permutation_sign, sphere_bundle
from src.generators.standard import cross_polytope, cycle, path_ball, simplex_ball, simplex_sphere
from src.homology.betti import betti
from src.models.errors import DimOutOfRangeError, InadmissibleGluingError
from src.recognition.stacked import is_stacked_ball


class TestStandard:

    def test_simplex_ball(self):
        assert simplex_ball(2).facets == ((0, 1, 2),)

    def test_simplex_sphere(self):
        X = simplex_sphere(3)
        assert X.n_vertices == 5
        assert len(X) == 5

    def test_path_ball_labels(self):
        X = path_ball(2, 3)
        assert X.facets == ((1, 2, 3), (2, 3, 4), (3, 4, 5))

    def test_cross_polytope_is_octahedron(self):
        X = cross_polytope(2)
        assert X.n_vertices == 6
        assert len(X) == 8

    @pytest.mark.parametrize("builder", [simplex_ball, simplex_sphere, cross_polytope])
    def test_negative_dimension(self, builder):
        with pytest.raises(DimOutOfRangeError):
            builder(-1)

    def test_path_ball_guard(self):
        with pytest.raises(DimOutOfRangeError):
            path_ball(0, 3)

    def test_cycle_guard(self):
        with pytest.raises(DimOutOfRangeError):
            cycle(2)


class TestFamilies:

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    @pytest.mark.parametrize("builder", [family_M, family_N])
    def test_counts(self, builder, d):
        fam = builder(d)
        n = d * d + 5 * d + 5
        assert fam.n == family_size(d) == n
        assert fam.filling.n_vertices == n
        assert len(fam.filling) == (d + 2) * n
        assert fam.filling.dimension == d + 1

    def test_m3_filling(self, m3):
        assert len(m3.filling) == 145
        assert len(m3.filling.dual_graph().edges) == 174

    def test_m2_manifold_f_vector(self, m2):
        assert m2.manifold.f_vector().counts == (19, 171, 114)

    def test_m3_manifold_f_vector(self, m3):
        assert m3.manifold.f_vector().counts == (29, 406, 754, 377)
        assert m3.manifold.is_neighborly(2)

    def test_m3_facet_formulas(self, m3):
        # n = 29, d + 3 = 6
        assert m3.facet(FacetKind.SIGMA, 0, 0) == (0, 25, 26, 27, 28)
        assert m3.facet(FacetKind.MU, 0, 0) == (0, 5, 11, 17, 23)
        assert m3.facet(FacetKind.ALPHA, 1, 0) == (0, 5, 25, 26, 27)

    def test_n3_mu(self, n3):
        assert n3.facet(FacetKind.MU, 0, 0) == (0, 5, 11, 17, 23)
        assert n3.facet(FacetKind.MU, 0, 6) == (0, 6, 11, 17, 23)

    def test_labels_round_trip(self, m2):
        labels = m2.label_of()
        assert len(labels) == len(m2.filling)
        assert str(FacetLabel(FacetKind.ALPHA, 2, 5)) == "alpha_2,5"
        assert str(FacetLabel(FacetKind.SIGMA, 0, 3)) == "sigma_3"

    def test_parts_are_stacked_balls(self, m3):
        assert is_stacked_ball(m3.alpha_part(4))
        assert len(m3.sigma_part) == len(m3.mu_part) == 29

    def test_connecting_ridges(self, m3):
        a_ridge, b_ridge = connecting_ridges(m3, 0)
        assert len(a_ridge) == len(b_ridge) == 4
        assert set(a_ridge) <= set(m3.facet(FacetKind.SIGMA, 0, 0))
        assert set(b_ridge) <= set(m3.facet(FacetKind.MU, 0, 0))

    def test_unpack(self, m2):
        filling, manifold = m2
        assert manifold == filling.boundary()
        assert manifold.is_closed()

    def test_dimension_guard(self):
        with pytest.raises(DimOutOfRangeError):
            family_M(1)

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            family("Q", 3)
        assert family("n", 2).family == "N"


class TestPermutations:

    def test_parse(self):
        assert parse_permutation("id", 3) == (1, 2, 3)
        assert parse_permutation("2 1 3", 3) == (2, 1, 3)
        assert parse_permutation("2,1,3,4", 4) == (2, 1, 3, 4)
        assert parse_permutation("213", 3) == (2, 1, 3)

    def test_parse_rejects(self):
        with pytest.raises(ValueError):
            parse_permutation("1 1 2", 3)

    def test_sign(self):
        assert permutation_sign((1, 2, 3)) == 1
        assert permutation_sign((2, 1, 3)) == -1
        assert permutation_sign((2, 3, 1)) == 1


class TestSphereBundles:

    def test_seven_vertex_torus(self):
        X = sphere_bundle(2, 7, (1, 2, 3))
        assert X.n_vertices == 7
        assert X.f_vector().euler == 0
        assert X.is_neighborly(2)
        assert betti(X) == (1, 2, 1)

    def test_three_dimensional(self):
        X = sphere_bundle(3, 9, (1, 2, 3, 4))
        assert X.n_vertices == 9
        assert X.is_closed()
        assert betti(X)[1] == 1

    def test_transposition_at_minimum_is_inadmissible(self):
        with pytest.raises(InadmissibleGluingError) as info:
            sphere_bundle(3, 9, (2, 1, 3, 4))
        assert info.value.pair[0] in (1, 2)

    def test_six_vertices_too_few_for_a_surface(self):
        with pytest.raises(InadmissibleGluingError) as info:
            sphere_bundle(2, 6, (1, 2, 3))
        assert info.value.common_neighbor is not None

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_below_2d_plus_3_every_sigma_is_inadmissible(self, m):
        for sigma in all_permutations(3):
            with pytest.raises(InadmissibleGluingError):
                sphere_bundle(2, m, sigma)

    def test_overlapping_faces(self):
        with pytest.raises(InadmissibleGluingError) as info:
            sphere_bundle(3, 2, (1, 2, 3, 4))
        assert info.value.common_neighbor is None
        assert "overlapping" in str(info.value)

    def test_sigma_must_be_a_permutation(self):
        with pytest.raises(ValueError):
            sphere_bundle(2, 7, (1, 1, 3))

    def test_dimension_guard(self):
        with pytest.raises(DimOutOfRangeError):
            sphere_bundle(1, 5, (1, 2))
