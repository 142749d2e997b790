"""
Vertex bijections and permutation groups given by generators.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Set, Tuple

from src.models.complex import Complex, Face
from src.models.errors import GroupOrderOverflowError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexPermutation:
    """
    Bijection from a sorted vertex list onto a list of images.

    ``images[k]`` is the image of ``domain[k]``. Domain and image sets agree
    for permutations of one complex; isomorphisms between two complexes use
    the same type with different sets.
    """
    domain: Tuple[int, ...]
    images: Tuple[int, ...]

    def __post_init__(self):
        if len(self.domain) != len(self.images) or len(set(self.images)) != len(self.images):
            raise ValueError("Images must be distinct and match the domain in length")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "VertexPermutation":
        domain = tuple(sorted(mapping))
        return cls(domain, tuple(int(mapping[v]) for v in domain))

    @classmethod
    def identity(cls, vertices: Iterable[int]) -> "VertexPermutation":
        domain = tuple(sorted(vertices))
        return cls(domain, domain)

    @classmethod
    def shift(cls, n: int, k: int = 1) -> "VertexPermutation":
        """The cyclic shift i -> i + k (mod n) on {0..n-1}."""
        return cls(tuple(range(n)), tuple((i + k) % n for i in range(n)))

    def as_dict(self) -> Dict[int, int]:
        return dict(zip(self.domain, self.images))

    def __call__(self, v: int) -> int:
        return self.as_dict()[v]

    @property
    def is_permutation(self) -> bool:
        return set(self.domain) == set(self.images)

    def is_identity(self) -> bool:
        return self.domain == self.images

    def apply_face(self, face: Iterable[int]) -> Face:
        mapping = self.as_dict()
        return Face(mapping[v] for v in face)

    def apply(self, X: Complex) -> Complex:
        mapping = self.as_dict()
        return Complex.from_canonical(Face(mapping[v] for v in facet) for facet in X.facets)

    def compose(self, other: "VertexPermutation") -> "VertexPermutation":
        """self after other."""
        mine = self.as_dict()
        return VertexPermutation(other.domain, tuple(mine[y] for y in other.images))

    def inverse(self) -> "VertexPermutation":
        return VertexPermutation.from_mapping({y: x for x, y in zip(self.domain, self.images)})

    def to_list(self) -> List[int]:
        """One-line image array over the sorted domain."""
        return list(self.images)


def is_automorphism(X: Complex, perm: VertexPermutation) -> bool:
    """True iff ``perm`` permutes the vertices of X and maps facets onto facets."""
    if set(perm.domain) != X.vertex_set or not perm.is_permutation:
        return False
    return perm.apply(X) == X


def is_isomorphism(X: Complex, Y: Complex, mapping: VertexPermutation) -> bool:
    if set(mapping.domain) != X.vertex_set or set(mapping.images) != Y.vertex_set:
        return False
    return mapping.apply(X) == Y


def induced_facet_map(X: Complex, perm: VertexPermutation) -> Tuple[int, ...]:
    """
    Permutation of facet indices induced by an automorphism.

    It preserves adjacency in the dual graph.
    """
    index = {facet: k for k, facet in enumerate(X.facets)}
    return tuple(index[perm.apply_face(facet)] for facet in X.facets)


def orbit(v: int, generators: Sequence[VertexPermutation]) -> Set[int]:
    """Orbit of v under the group generated by ``generators``."""
    maps = [g.as_dict() for g in generators]
    seen = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for g in maps:
            y = g.get(x, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def closure(generators: Sequence[VertexPermutation], vertices: Iterable[int], cap: int) -> Set[Tuple[int, ...]]:
    """
    All group elements generated by ``generators``, as image tuples.

    Raises:
        GroupOrderOverflowError: If more than ``cap`` elements are generated
    """
    start = VertexPermutation.identity(vertices)
    seen = {start.images}
    queue = deque([start])
    while queue:
        element = queue.popleft()
        for g in generators:
            product = g.compose(element)
            if product.images not in seen:
                seen.add(product.images)
                if len(seen) > cap:
                    raise GroupOrderOverflowError(f"Closure exceeds {cap} elements")
                queue.append(product)
    return seen


@dataclass
class GroupDescription:
    """
    Permutation group given by generators and its exact order.

    Attributes:
        generators: generating automorphisms
        order: group order (product of the basic orbit lengths)
        base: points whose pointwise stabilizer is trivial
        orbit_sizes: length of the basic orbit at each base point
    """
    generators: List[VertexPermutation] = field(default_factory=list)
    order: int = 1
    base: Tuple[int, ...] = ()
    orbit_sizes: Tuple[int, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "base": list(self.base),
            "orbit_sizes": list(self.orbit_sizes),
            "generators": [g.to_list() for g in self.generators],
        }
