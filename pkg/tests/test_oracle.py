"""Cross-checks of the optimized routines against the brute-force oracle."""

import numpy as np
import pytest

from src.generators.standard import cross_polytope, cycle, path_ball, simplex_ball, simplex_sphere
from src.homology.betti import betti
from src.models.complex import Complex
from src.models.errors import TooLargeError
from src.oracle import naive_betti, naive_f_vector, naive_faces, naive_stacked_ball
from src.recognition.stacked import is_stacked_ball

SEED = 20130611


def random_complex(rng, pure):
    n_vertices = int(rng.integers(3, 9))
    dim = int(rng.integers(1, 4))
    facets = []
    for _ in range(int(rng.integers(1, 8))):
        size = dim + 1 if pure else int(rng.integers(1, dim + 2))
        size = min(size, n_vertices)
        facets.append(tuple(int(v) for v in rng.choice(n_vertices, size=size, replace=False)))
    return Complex(facets)


@pytest.fixture(scope="module")
def random_complexes():
    rng = np.random.default_rng(SEED)
    return [random_complex(rng, pure=bool(k % 2)) for k in range(500)]


class TestFaceCounts:

    def test_random_complexes(self, random_complexes):
        for X in random_complexes:
            assert tuple(naive_f_vector(X)) == X.f_vector().counts, X.facets

    @pytest.mark.parametrize("part", ["filling", "manifold"])
    def test_family_m2(self, m2, part):
        X = getattr(m2, part)
        assert tuple(naive_f_vector(X)) == X.f_vector().counts

    def test_faces_of_octahedron(self):
        faces = naive_faces(cross_polytope(2))
        assert len(faces[1]) == 12
        assert frozenset((0, 2, 4)) in faces[2]


class TestBettiAgainstOracle:

    def test_random_complexes(self, random_complexes):
        for X in random_complexes:
            assert betti(X) == naive_betti(X), X.facets

    @pytest.mark.parametrize("X", [simplex_sphere(3), simplex_ball(4), cycle(7), cross_polytope(3)])
    def test_standard(self, X):
        assert betti(X) == naive_betti(X)

    def test_family_surface(self, m2):
        assert naive_betti(m2.manifold) == (1, 40, 1)

    def test_family_m3(self, m3):
        assert naive_betti(m3.manifold) == betti(m3.manifold) == (1, 30, 30, 1)

    def test_family_n3_filling_is_a_handlebody(self, n3):
        dual = n3.filling.dual_graph()
        rank = len(dual.edges) - len(dual.nodes) + 1
        assert rank == 30
        assert naive_betti(n3.filling) == betti(n3.filling) == (1, rank, 0, 0, 0)

    def test_empty(self):
        assert len(naive_betti(Complex.empty())) == 0

    def test_cap(self):
        with pytest.raises(TooLargeError) as info:
            naive_betti(simplex_sphere(4), cap=5)
        assert info.value.size > 5


class TestStackedBallAgainstOracle:

    def test_random_pure_complexes(self, random_complexes):
        compared = 0
        for X in random_complexes:
            if X.is_pure and X.dimension >= 1 and len(X) <= 12:
                assert naive_stacked_ball(X) == is_stacked_ball(X), X.facets
                compared += 1
        assert compared > 100

    def test_known_answers(self):
        assert naive_stacked_ball(path_ball(3, 6))
        assert naive_stacked_ball(Complex([(0, 1), (1, 2), (2, 3)]).cone(9))
        assert not naive_stacked_ball(cycle(4).cone(9))
        assert not naive_stacked_ball(Complex([(0, 1, 2), (0, 1, 3), (0, 1, 4)]))

    def test_not_pure(self):
        assert not naive_stacked_ball(Complex([(0, 1, 2), (3, 4)]))

    def test_cap(self):
        with pytest.raises(TooLargeError):
            naive_stacked_ball(path_ball(2, 13))
