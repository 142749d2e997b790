"""Tests for faces, complexes and the derived structures."""

import pytest

from src.generators.standard import cross_polytope, cycle, path_ball, simplex_ball, simplex_sphere
from src.models.complex import Complex, Face, PseudoClass, build_complex
from src.models.errors import EmptyComplexError, FaceNotFoundError, NotPureError, NotWeakError, UnknownVertexError


class TestFace:

    def test_canonical_order(self):
        assert Face((3, 1, 2)) == (1, 2, 3)
        assert Face([2, 2, 1]) == (1, 2)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Face((0, -1))

    def test_without(self):
        assert Face((1, 2, 3)).without(2) == (1, 3)
        assert Face((1, 2, 3)).dim == 2


class TestConstruction:

    def test_drops_non_maximal_and_duplicates(self):
        X = Complex([(0, 1, 2), (1, 2), (2, 1, 0), (3,)])
        assert X.facets == ((0, 1, 2), (3,))
        assert not X.is_pure

    def test_build_complex_empty(self):
        with pytest.raises(EmptyComplexError):
            build_complex([])

    def test_build_complex_empty_facet(self):
        with pytest.raises(ValueError):
            build_complex([(0, 1), ()])

    def test_require_pure(self):
        with pytest.raises(NotPureError):
            Complex([(0, 1, 2), (3, 4)]).require_pure()


class TestFaces:

    def test_simplex_f_vector(self):
        assert simplex_ball(3).f_vector().counts == (4, 6, 4, 1)

    def test_octahedron(self):
        X = cross_polytope(2)
        f = X.f_vector()
        assert f.counts == (6, 12, 8)
        assert f.euler == 2

    def test_faces_lexicographic(self):
        X = simplex_sphere(1)
        assert X.faces(0) == ((0,), (1,), (2,))
        assert X.faces(1) == ((0, 1), (0, 2), (1, 2))
        assert X.faces(5) == ()

    def test_has_face(self):
        X = path_ball(2, 3)
        assert X.has_face((2, 3))
        assert not X.has_face((1, 4))


class TestLocalStructure:

    def test_link_in_octahedron_is_square(self):
        X = cross_polytope(2)
        lk = X.link((0,))
        assert lk.n_vertices == 4
        assert len(lk) == 4
        assert 1 not in lk.vertex_set

    def test_star_and_link_of_missing_face(self):
        with pytest.raises(FaceNotFoundError):
            cycle(5).link((0, 2))

    def test_link_of_empty_face(self):
        X = cycle(4)
        assert X.link(()) == X

    def test_neighbors_unknown_vertex(self):
        with pytest.raises(UnknownVertexError):
            cycle(4).neighbors(9)

    def test_edge_multiplicities(self):
        X = simplex_sphere(2)
        assert set(X.edge_multiplicities.values()) == {2}

    def test_cone_apex(self):
        X = cycle(4).cone(9)
        assert X.cone_apex() == 9
        assert cycle(4).cone_apex() is None


class TestDualGraphAndBoundary:

    def test_path_ball_dual_graph_is_path(self):
        dual = path_ball(3, 4).dual_graph()
        assert dual.edges == ((0, 1), (1, 2), (2, 3))
        assert dual.is_tree()

    def test_pseudo_classification(self):
        assert simplex_sphere(2).classify_pseudo() is PseudoClass.PSEUDOMANIFOLD
        three_on_edge = Complex([(0, 1, 2), (0, 1, 3), (0, 1, 4)])
        assert three_on_edge.classify_pseudo() is PseudoClass.NOT_WEAK
        two_apart = Complex([(0, 1, 2), (3, 4, 5)])
        assert two_apart.classify_pseudo() is PseudoClass.WEAK_PSEUDOMANIFOLD

    def test_boundary_of_simplex(self):
        assert simplex_ball(3).boundary() == simplex_sphere(2)

    def test_boundary_of_sphere_is_empty(self):
        assert simplex_sphere(3).boundary().is_empty
        assert simplex_sphere(3).is_closed()

    def test_boundary_needs_weak_pseudomanifold(self):
        with pytest.raises(NotWeakError):
            Complex([(0, 1, 2), (0, 1, 3), (0, 1, 4)]).boundary()


class TestDerived:

    def test_neighborly(self):
        assert simplex_sphere(3).is_neighborly(2)
        assert not cross_polytope(2).is_neighborly(2)

    def test_induced(self):
        X = cross_polytope(2).induced((0, 2, 4))
        assert X.facets == ((0, 2, 4),)

    def test_induced_unknown_vertex(self):
        with pytest.raises(UnknownVertexError):
            cycle(4).induced((0, 7))

    def test_skeleton(self):
        X = simplex_ball(3).skeleton(1)
        assert X.dimension == 1
        assert len(X) == 6

    def test_relabel_rejects_collisions(self):
        with pytest.raises(ValueError):
            cycle(4).relabel({0: 1})

    def test_disjoint_union(self):
        X = cycle(3).disjoint_union(cycle(3))
        assert X.n_vertices == 6
        assert not X.is_connected()
