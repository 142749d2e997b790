"""Tests for orientability, explicit orientations of the even families and the bundle parity rule."""

import pytest

from src.generators.families import FacetKind, FacetLabel, family, family_M
from src.generators.handles import all_permutations, sphere_bundle
from src.generators.standard import cross_polytope, cycle, simplex_ball, simplex_sphere
from src.models.certificate import CheckVerdict
from src.models.complex import Face
from src.models.errors import InadmissibleGluingError, NotClosedManifoldLikeError, NotConnectedError
from src.orientation.orientability import (
    bundle_orientable_prediction,
    bundle_parity_check,
    first_incoherent_ridge,
    is_coherent,
    orientability,
    ordered_sign,
)


def oriented_filling(fam):
    """
    Ordered vertex tuple and sign for every facet of an M filling.

    sigma_i = +<a_{i-d-1}, ..., a_i>, mu_i = -<a_{i+(d+3)-1}, ..., a_{i+(d+1)(d+3)-1}, a_i>
    and alpha_{k,i} = +<a_{i-2-d+k}, ..., a_{i-2}, a_i, a_{i+d+2}, ..., a_{i+k(d+3)-1}>.
    """
    d, n = fam.d, fam.n
    oriented = {}
    for i in range(n):
        oriented[FacetLabel(FacetKind.SIGMA, 0, i)] = ([(i - d - 1 + j) % n for j in range(d + 2)], 1)
        b = [(i + j * (d + 3) - 1) % n for j in range(1, d + 2)] + [i]
        oriented[FacetLabel(FacetKind.MU, 0, i)] = (b, -1)
        for k in range(1, d + 1):
            head = [(i - 2 - d + k + j) % n for j in range(d + 1 - k)]
            tail = [(i + j * (d + 3) - 1) % n for j in range(1, k + 1)]
            oriented[FacetLabel(FacetKind.ALPHA, k, i)] = (head + [i] + tail, 1)
    return oriented


def filling_and_boundary_signs(fam):
    oriented = oriented_filling(fam)
    filling_signs, boundary_signs = {}, {}
    for label, (ordered, eps) in oriented.items():
        face, sign = ordered_sign(ordered)
        assert face == fam.facets[label]
        filling_signs[face] = eps * sign
        for l in range(len(ordered)):
            rest = ordered[:l] + ordered[l + 1:]
            ridge, ridge_sign = ordered_sign(rest)
            boundary_signs.setdefault(ridge, []).append(eps * (-1) ** l * ridge_sign)
    boundary = {ridge: signs[0] for ridge, signs in boundary_signs.items() if len(signs) == 1}
    return filling_signs, boundary


class TestOrientability:

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_spheres(self, d):
        result = orientability(simplex_sphere(d))
        assert result
        assert is_coherent(simplex_sphere(d), result.assignment.signs)

    def test_octahedron(self):
        assert orientability(cross_polytope(2)).orientable

    @pytest.mark.parametrize("d,expected", [(2, True), (3, False)])
    def test_family_m(self, d, expected):
        assert orientability(family_M(d).manifold).orientable is expected

    @pytest.mark.slow
    @pytest.mark.parametrize("d,expected", [(4, True), (5, False)])
    def test_family_m_higher(self, d, expected):
        assert orientability(family_M(d).manifold).orientable is expected

    @pytest.mark.parametrize("name", ["M", "N"])
    @pytest.mark.parametrize("d", [2, 3, pytest.param(4, marks=pytest.mark.slow), pytest.param(5, marks=pytest.mark.slow)])
    def test_families_follow_the_bundle_parity_rule(self, d, name):
        fam = family(name, d)
        expected = bundle_orientable_prediction(d, fam.n, tuple(range(1, d + 2)))
        assert expected is (d % 2 == 0)
        result = orientability(fam.manifold)
        assert result.orientable is expected
        if expected:
            assert is_coherent(fam.manifold, result.assignment.signs)
        else:
            assert result.witness

    def test_n3_flip_cycle(self, n3):
        result = orientability(n3.manifold)
        assert not result
        cycle_facets = result.witness
        assert len(cycle_facets) >= 3
        for f, g in zip(cycle_facets, cycle_facets[1:] + cycle_facets[:1]):
            assert len(set(f) & set(g)) == 3
        assert "flip_cycle" in result.to_dict()

    def test_seed_does_not_change_verdict(self, m2, n3):
        for seed in range(4):
            assert orientability(m2.manifold, seed=seed).orientable
            assert not orientability(n3.manifold, seed=seed).orientable

    def test_ball_is_refused(self):
        with pytest.raises(NotClosedManifoldLikeError):
            orientability(simplex_ball(3))

    def test_disconnected(self):
        with pytest.raises(NotConnectedError):
            orientability(cycle(3).disjoint_union(cycle(3)))

    def test_incoherent_signs_are_located(self):
        X = simplex_sphere(2)
        signs = dict(orientability(X).assignment.signs)
        flipped = X.facets[0]
        signs[flipped] = -signs[flipped]
        ridge = first_incoherent_ridge(X, signs)
        assert ridge is not None
        assert set(ridge) <= set(flipped)

    def test_ordered_sign(self):
        assert ordered_sign((2, 0, 1)) == (Face((0, 1, 2)), 1)
        assert ordered_sign((1, 0, 2)) == (Face((0, 1, 2)), -1)


class TestEvenFamilyOrientation:

    @pytest.mark.parametrize("d", [2, pytest.param(4, marks=pytest.mark.slow)])
    def test_explicit_orientation_is_coherent(self, d):
        fam = family_M(d)
        filling_signs, boundary = filling_and_boundary_signs(fam)
        assert is_coherent(fam.filling, filling_signs)
        assert set(boundary) == set(fam.manifold.facets)
        assert is_coherent(fam.manifold, boundary)

    def test_odd_dimension_has_no_such_orientation(self, m3):
        filling_signs, _ = filling_and_boundary_signs(m3)
        assert not is_coherent(m3.filling, filling_signs)


class TestBundleParity:

    def test_prediction(self):
        assert bundle_orientable_prediction(2, 7, (1, 2, 3))
        assert not bundle_orientable_prediction(3, 9, (1, 2, 3, 4))
        assert bundle_orientable_prediction(3, 11, (2, 1, 3, 4))

    def test_transposition_at_eleven(self):
        certificate = bundle_parity_check(3, 11, (2, 1, 3, 4))
        result = certificate.check("bundle-parity")
        assert result.verdict is CheckVerdict.PASS
        assert result.witness["orientable"]

    def test_inadmissible(self):
        with pytest.raises(InadmissibleGluingError):
            bundle_parity_check(3, 9, (2, 1, 3, 4))

    @pytest.mark.parametrize("d", [2, 3])
    def test_sweep(self, d):
        checked = 0
        for m in range(2 * d + 3, 3 * d + 5):
            for sigma in all_permutations(d + 1):
                try:
                    certificate = bundle_parity_check(d, m, sigma)
                except InadmissibleGluingError:
                    continue
                assert certificate.passed, (m, sigma)
                checked += 1
        assert checked > 0

    def test_torus_is_orientable(self):
        assert orientability(sphere_bundle(2, 7, (1, 2, 3))).orientable
