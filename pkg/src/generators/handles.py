"""
Vertex identification, combinatorial handle additions and sphere bundles.

Identifications run through a union-find whose root is always the smallest
label of its class, so the result does not depend on the order in which
pairs are merged.
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from src.generators.standard import path_ball
from src.models.complex import Complex, Face
from src.models.errors import (
    DegenerateIdentificationError,
    DimOutOfRangeError,
    InadmissibleGluingError,
    NotDisjointError,
    NotFacetError,
)

logger = logging.getLogger(__name__)


class UnionFind:
    """Disjoint sets over integer labels; the smallest label is the representative."""

    def __init__(self, labels: Iterable[int] = ()):
        self.parent: Dict[int, int] = {v: v for v in labels}

    def add(self, v: int) -> None:
        self.parent.setdefault(v, v)

    def find(self, v: int) -> int:
        self.add(v)
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, a: int, b: int) -> bool:
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return False
        if root_b < root_a:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        return True

    def mapping(self) -> Dict[int, int]:
        return {v: self.find(v) for v in list(self.parent)}


@dataclass(frozen=True)
class GluingMap:
    """
    Bijection between the vertices of two disjoint faces.

    Attributes:
        source: face whose vertices are mapped
        target: face receiving the images
        pairing: (source vertex, target vertex) pairs sorted by source vertex
    """
    source: Face
    target: Face
    pairing: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        sources = [a for a, _ in self.pairing]
        targets = [b for _, b in self.pairing]
        if sorted(sources) != list(self.source) or sorted(targets) != list(self.target):
            raise ValueError("Pairing must be a bijection between source and target vertices")
        common = set(self.source) & set(self.target)
        if common:
            raise NotDisjointError(f"Gluing faces share vertices {sorted(common)}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "GluingMap":
        pairing = tuple(sorted((int(a), int(b)) for a, b in pairs))
        return cls(
            source=Face(a for a, _ in pairing),
            target=Face(b for _, b in pairing),
            pairing=pairing,
        )

    def as_dict(self) -> Dict[int, int]:
        return dict(self.pairing)


@dataclass
class HandleResult:
    """
    Outcome of a handle addition.

    Attributes:
        complex: the glued complex
        admissible: no paired vertices had a common neighbour
        violation: (pair, common neighbour) for the first inadmissible pair
        vertex_map: old label -> new label for every vertex of the input
    """
    complex: Complex
    admissible: bool
    violation: Optional[Tuple[Tuple[int, int], int]] = None
    vertex_map: Dict[int, int] = field(default_factory=dict)


def find_violation(X: Complex, pairs: Iterable[Tuple[int, int]]) -> Optional[Tuple[Tuple[int, int], int]]:
    """
    First pair (u, w) whose vertices share a neighbour in X, with that neighbour.

    Pairs are scanned in sorted order and the smallest common neighbour is
    reported, so the witness is deterministic.
    """
    for u, w in sorted(pairs):
        common = X.neighbors(u) & X.neighbors(w)
        if common:
            return (u, w), min(common)
    return None


def identify_vertices(
    facets: Iterable[Sequence[int]], pairs: Iterable[Tuple[int, int]]
) -> Tuple[Complex, Dict[int, int]]:
    """
    Quotient of a facet list by the equivalence generated by ``pairs``.

    Returns:
        Tuple of (quotient complex, old label -> representative)

    Raises:
        DegenerateIdentificationError: If a facet loses a vertex or two facets coincide
    """
    facets = [tuple(f) for f in facets]
    uf = UnionFind(v for f in facets for v in f)
    for a, b in pairs:
        uf.union(a, b)
    mapping = uf.mapping()

    images = []
    for facet in facets:
        image = Face(mapping[v] for v in facet)
        if len(image) != len(facet):
            raise DegenerateIdentificationError(
                f"Identification collapses facet {facet} to {tuple(image)}"
            )
        images.append(image)
    if len(set(images)) != len(images):
        raise DegenerateIdentificationError("Identification merges two facets")
    return Complex.from_canonical(images), mapping


def handle_addition(X: Complex, gluing: GluingMap) -> HandleResult:
    """
    Remove the two facets of ``gluing`` from X and identify paired vertices.

    The merged vertex keeps the smaller label.

    Raises:
        NotFacetError: If source or target is not a facet of X
        NotDisjointError: If source and target share a vertex
    """
    facets = set(X.facets)
    for face in (gluing.source, gluing.target):
        if face not in facets:
            raise NotFacetError(f"{tuple(face)} is not a facet of {X}")

    violation = find_violation(X, gluing.pairing)
    remaining = [f for f in X.facets if f != gluing.source and f != gluing.target]
    glued, mapping = identify_vertices(remaining, gluing.pairing)
    for v in X.vertices:
        mapping.setdefault(v, v)

    if violation is None:
        logger.debug(f"Admissible handle {gluing.pairing}: {X.n_vertices} -> {glued.n_vertices} vertices")
    else:
        logger.warning(
            f"Inadmissible handle: {violation[0][0]} and {violation[0][1]} share neighbour {violation[1]}"
        )
    return HandleResult(glued, violation is None, violation, mapping)


def glue_along(X: Complex, Y: Complex, pairs: Iterable[Tuple[int, int]]) -> Tuple[Complex, Dict[int, int]]:
    """
    Union of two complexes with disjoint labels, with the given vertices identified.

    Raises:
        NotDisjointError: If X and Y share a label
    """
    shared = X.vertex_set & Y.vertex_set
    if shared:
        raise NotDisjointError(f"Complexes share labels {sorted(shared)[:8]}")
    return identify_vertices(list(X.facets) + list(Y.facets), pairs)


# ----------------------------------------------------------------------
# sphere bundles
# ----------------------------------------------------------------------

def parse_permutation(word: str, size: int) -> Tuple[int, ...]:
    """
    Parse a one-line permutation of {1..size}.

    Accepts ``id``, space or comma separated images ("2 1 3") and, when
    size < 10, a run of digits ("213").

    Raises:
        ValueError: If the word is not a permutation of {1..size}
    """
    text = word.strip()
    if text.lower() == "id":
        return tuple(range(1, size + 1))
    if "," in text or " " in text:
        images = tuple(int(tok) for tok in text.replace(",", " ").split())
    elif size < 10 and text.isdigit():
        images = tuple(int(ch) for ch in text)
    else:
        images = (int(text),)
    if sorted(images) != list(range(1, size + 1)):
        raise ValueError(f"{word!r} is not a permutation of 1..{size}")
    return images


def permutation_sign(perm: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd ones (inversion count)."""
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def all_permutations(size: int) -> List[Tuple[int, ...]]:
    return list(permutations(range(1, size + 1)))


def bundle_gluing(d: int, m: int, sigma: Sequence[int]) -> GluingMap:
    """The identification i -> m + sigma(i) of A = {1..d+1} onto B = {m+1..m+d+1}."""
    if sorted(sigma) != list(range(1, d + 2)):
        raise ValueError(f"sigma must permute 1..{d + 1}")
    return GluingMap.from_pairs((i, m + sigma[i - 1]) for i in range(1, d + 2))


def sphere_bundle(d: int, m: int, sigma: Sequence[int]) -> Complex:
    """
    The m-vertex complex X^d_m(sigma).

    Takes the boundary of the stacked (d+1)-ball with facets {k..k+d+1},
    1 <= k <= m, removes A = {1..d+1} and B = {m+1..m+d+1} and glues them by
    i -> m + sigma(i).

    Args:
        d: dimension, at least 2
        m: number of vertices of the result
        sigma: permutation of {1..d+1} in one-line form

    Raises:
        DimOutOfRangeError: If d < 2
        InadmissibleGluingError: If some u in A shares a neighbour with its image,
            which happens for every sigma when m < 2d+3, or if A and B overlap
        ValueError: If sigma is not a permutation of 1..d+1
    """
    if d < 2:
        raise DimOutOfRangeError(f"Sphere bundles need d >= 2, got {d}")
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, d + 2)):
        raise ValueError(f"sigma must permute 1..{d + 1}")
    if m <= d:
        logger.error(f"X^{d}_{m}{sigma}: glued faces overlap")
        raise InadmissibleGluingError((1, m + sigma[0]))
    gluing = bundle_gluing(d, m, sigma)
    sphere = path_ball(d + 1, m).boundary()

    violation = find_violation(sphere, gluing.pairing)
    if violation is not None:
        pair, common = violation
        logger.error(f"X^{d}_{m}{sigma}: {pair[0]} and {pair[1]} share neighbour {common}")
        raise InadmissibleGluingError(pair, common)

    result = handle_addition(sphere, gluing).complex
    logger.info(f"Built sphere bundle X^{d}_{m}{sigma}: {result}")
    return result
