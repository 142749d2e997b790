"""
Standard complexes: simplices, their boundaries, stacked path balls and
cross-polytope boundaries.
"""

import logging
from itertools import combinations, product

from src.models.complex import Complex
from src.models.errors import DimOutOfRangeError

logger = logging.getLogger(__name__)


def simplex_ball(d: int) -> Complex:
    """Standard d-ball: one facet on labels {0..d}."""
    if d < 0:
        raise DimOutOfRangeError(f"Dimension must be non-negative, got {d}")
    return Complex([range(d + 1)])


def simplex_sphere(d: int) -> Complex:
    """Standard d-sphere S^d_{d+2}: boundary of the (d+1)-simplex on {0..d+1}."""
    if d < 0:
        raise DimOutOfRangeError(f"Dimension must be non-negative, got {d}")
    return Complex(combinations(range(d + 2), d + 1))


def path_ball(D: int, m: int) -> Complex:
    """
    Stacked D-ball on {1..m+D} whose facets are the m windows {k..k+D}.

    Args:
        D: dimension, at least 1
        m: number of facets, at least 1
    """
    if D < 1 or m < 1:
        raise DimOutOfRangeError(f"path_ball needs D >= 1 and m >= 1, got D={D}, m={m}")
    return Complex([range(k, k + D + 1) for k in range(1, m + 1)])


def cross_polytope(d: int) -> Complex:
    """
    Boundary of the (d+1)-dimensional cross-polytope.

    Vertices 2i and 2i+1 are antipodal; every facet picks one of each pair.
    ``cross_polytope(2)`` is the octahedron.
    """
    if d < 0:
        raise DimOutOfRangeError(f"Dimension must be non-negative, got {d}")
    return Complex(
        [tuple(2 * i + s for i, s in enumerate(choice)) for choice in product((0, 1), repeat=d + 1)]
    )


def cycle(n: int) -> Complex:
    """The n-cycle on {0..n-1}."""
    if n < 3:
        raise DimOutOfRangeError(f"A cycle needs at least 3 vertices, got {n}")
    return Complex([(i, (i + 1) % n) for i in range(n)])
