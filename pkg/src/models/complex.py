"""
Finite abstract simplicial complexes.

A complex is stored as its list of facets over non-negative integer vertex
labels; faces, links, stars, the dual graph and the boundary are all derived
from that list on demand and cached. Complexes are immutable after
construction, so every derived structure can be shared between threads.

Faces are canonical sorted tuples and iteration order is lexicographic
everywhere, which keeps every report deterministic.
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from src.models.errors import (
    EmptyComplexError,
    FaceNotFoundError,
    NotPureError,
    NotWeakError,
    UnknownVertexError,
)

logger = logging.getLogger(__name__)


class Face(tuple):
    """
    Immutable, strictly increasing sequence of vertex labels.

    Faces compare and hash like the underlying tuple, so ``Face((1, 2)) ==
    (1, 2)`` and faces can be used directly as dictionary keys.
    """

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int] = ()):
        if isinstance(vertices, Face):
            return vertices
        labels = sorted(set(vertices))
        for label in labels:
            if isinstance(label, bool) or not isinstance(label, int) and not hasattr(label, "__index__"):
                raise ValueError(f"Vertex label {label!r} is not an integer")
            if label < 0:
                raise ValueError(f"Vertex label {label} is negative")
        return super().__new__(cls, (int(label) for label in labels))

    @classmethod
    def trusted(cls, vertices: Tuple[int, ...]) -> "Face":
        """Wrap an already sorted, duplicate-free tuple without re-checking it."""
        return tuple.__new__(cls, vertices)

    @property
    def dim(self) -> int:
        """Dimension, i.e. number of vertices minus one."""
        return len(self) - 1

    def without(self, vertex: int) -> "Face":
        """Face with one vertex removed."""
        return Face.trusted(tuple(v for v in self if v != vertex))

    def issubface(self, other: Sequence[int]) -> bool:
        return set(self).issubset(other)

    def __repr__(self) -> str:
        return f"Face{tuple.__repr__(self)}"


class PseudoClass(Enum):
    """Pseudomanifold classification of a pure complex."""
    NOT_WEAK = "not_weak"  # some ridge in three or more facets
    WEAK_PSEUDOMANIFOLD = "weak_pseudomanifold"
    PSEUDOMANIFOLD = "pseudomanifold"  # weak and dual graph connected


@dataclass(frozen=True)
class FVector:
    """
    Face counts of a complex.

    Attributes:
        counts: f_0, ..., f_d
        euler: alternating sum of the counts
    """
    counts: Tuple[int, ...]
    euler: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        object.__setattr__(
            self, "euler", sum((-1) ** j * c for j, c in enumerate(self.counts))
        )

    def __getitem__(self, j: int) -> int:
        return self.counts[j]

    def __len__(self) -> int:
        return len(self.counts)

    def to_dict(self) -> Dict[str, object]:
        return {"f": list(self.counts), "euler": self.euler}


@dataclass(frozen=True)
class DualGraph:
    """
    Dual graph of a pure complex.

    Attributes:
        nodes: facets of the complex in lexicographic order
        edges: pairs of node indices (i < j) whose facets share a ridge
        ridges: the shared ridge of each edge, aligned with ``edges``
    """
    nodes: Tuple[Face, ...]
    edges: Tuple[Tuple[int, int], ...]
    ridges: Tuple[Face, ...]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.nodes)))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self) -> bool:
        if not self.nodes:
            return False
        return nx.is_connected(self.to_networkx())

    def is_tree(self) -> bool:
        if not self.nodes:
            return False
        return nx.is_tree(self.to_networkx())

    def adjacency(self) -> Dict[int, List[Tuple[int, Face]]]:
        """Neighbour lists with the shared ridge, ordered by neighbour index."""
        adj: Dict[int, List[Tuple[int, Face]]] = {i: [] for i in range(len(self.nodes))}
        for (i, j), ridge in zip(self.edges, self.ridges):
            adj[i].append((j, ridge))
            adj[j].append((i, ridge))
        for i in adj:
            adj[i].sort()
        return adj


def _maximal_faces(faces: Iterable[Face]) -> Tuple[Face, ...]:
    """Drop duplicates, empty faces and faces contained in another face."""
    unique = {f for f in faces if len(f)}
    if not unique:
        return ()
    sizes = {len(f) for f in unique}
    if len(sizes) == 1:
        return tuple(sorted(unique))

    kept: List[Face] = []
    by_vertex: Dict[int, List[int]] = defaultdict(list)
    for face in sorted(unique, key=lambda f: (-len(f), f)):
        members = set(face)
        candidates = by_vertex.get(face[0], [])
        if any(members.issubset(kept[i]) for i in candidates):
            continue
        for v in face:
            by_vertex[v].append(len(kept))
        kept.append(face)
    return tuple(sorted(kept))


class Complex:
    """
    Finite abstract simplicial complex given by its facets.

    Construction canonicalizes every facet, merges duplicates and drops
    non-maximal sets. Purity is recorded, not required; operations that need
    a pure complex check it themselves.
    """

    def __init__(self, facets: Iterable[Iterable[int]] = ()):
        self._facets: Tuple[Face, ...] = _maximal_faces(Face(f) for f in facets)

    @classmethod
    def from_canonical(cls, facets: Iterable[Face]) -> "Complex":
        """Build from faces already known to be canonical and pairwise non-nested."""
        obj = cls.__new__(cls)
        obj._facets = tuple(sorted(set(facets)))
        return obj

    @classmethod
    def empty(cls) -> "Complex":
        return cls.from_canonical(())

    # ------------------------------------------------------------------
    # basic structure
    # ------------------------------------------------------------------

    @property
    def facets(self) -> Tuple[Face, ...]:
        return self._facets

    @cached_property
    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(v for f in self._facets for v in f)

    @cached_property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vertex_set))

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_set)

    @cached_property
    def dimension(self) -> int:
        return max((len(f) for f in self._facets), default=0) - 1

    @cached_property
    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) <= 1

    @property
    def is_empty(self) -> bool:
        return not self._facets

    def require_pure(self) -> None:
        if not self.is_pure:
            dims = sorted({len(f) - 1 for f in self._facets})
            raise NotPureError(f"Complex is not pure (facet dimensions {dims})")

    @cached_property
    def _vertex_index(self) -> Dict[int, Tuple[int, ...]]:
        index: Dict[int, List[int]] = defaultdict(list)
        for i, facet in enumerate(self._facets):
            for v in facet:
                index[v].append(i)
        return {v: tuple(ids) for v, ids in index.items()}

    def facets_containing(self, face: Iterable[int]) -> List[Face]:
        """Facets that contain every vertex of ``face``, in lexicographic order."""
        members = set(face)
        if not members:
            return list(self._facets)
        lists = []
        for v in members:
            ids = self._vertex_index.get(v)
            if ids is None:
                return []
            lists.append(ids)
        shortest = min(lists, key=len)
        return [self._facets[i] for i in shortest if members.issubset(self._facets[i])]

    def has_face(self, face: Iterable[int]) -> bool:
        return bool(self.facets_containing(face))

    # ------------------------------------------------------------------
    # face enumeration
    # ------------------------------------------------------------------

    @cached_property
    def _faces_by_dim(self) -> Tuple[Tuple[Face, ...], ...]:
        if not self._facets:
            return ()
        layers: List[set] = [set() for _ in range(self.dimension + 1)]
        for facet in self._facets:
            for size in range(1, len(facet) + 1):
                layers[size - 1].update(combinations(facet, size))
        return tuple(tuple(Face.trusted(f) for f in sorted(layer)) for layer in layers)

    def faces(self, j: int) -> Tuple[Face, ...]:
        """All j-dimensional faces in lexicographic order."""
        if j < 0 or j > self.dimension:
            return ()
        return self._faces_by_dim[j]

    @cached_property
    def face_set(self) -> FrozenSet[Face]:
        return frozenset(f for layer in self._faces_by_dim for f in layer)

    def f_vector(self) -> FVector:
        return FVector(tuple(len(layer) for layer in self._faces_by_dim))

    # ------------------------------------------------------------------
    # local structure
    # ------------------------------------------------------------------

    def _check_face(self, face: Iterable[int]) -> Face:
        face = Face(face)
        if face and not self.has_face(face):
            raise FaceNotFoundError(face)
        return face

    def star(self, face: Iterable[int]) -> "Complex":
        """Closed star: the facets through ``face`` and all their subfaces."""
        face = self._check_face(face)
        return Complex.from_canonical(self.facets_containing(face))

    def link(self, face: Iterable[int]) -> "Complex":
        """Faces of the star that are disjoint from ``face``."""
        face = self._check_face(face)
        members = set(face)
        remainders = (
            Face.trusted(tuple(v for v in facet if v not in members))
            for facet in self.facets_containing(face)
        )
        return Complex.from_canonical(f for f in remainders if f)

    @cached_property
    def graph(self) -> nx.Graph:
        """1-skeleton as a networkx graph."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for facet in self._facets:
            g.add_edges_from(combinations(facet, 2))
        return g

    def neighbors(self, vertex: int) -> FrozenSet[int]:
        if vertex not in self.vertex_set:
            raise UnknownVertexError(f"Vertex {vertex} not in complex")
        return frozenset(self.graph.neighbors(vertex))

    def degree(self, vertex: int) -> int:
        return len(self.neighbors(vertex))

    def is_connected(self) -> bool:
        return bool(self._facets) and nx.is_connected(self.graph)

    @cached_property
    def edge_multiplicities(self) -> Dict[Tuple[int, int], int]:
        """Number of facets containing each edge."""
        counts: Counter = Counter()
        for facet in self._facets:
            counts.update(combinations(facet, 2))
        return dict(counts)

    def cone_apex(self) -> Optional[int]:
        """A vertex lying in every facet, if any."""
        if not self._facets:
            return None
        common = set(self._facets[0]).intersection(*self._facets[1:])
        return min(common) if common else None

    # ------------------------------------------------------------------
    # ridges, dual graph and boundary
    # ------------------------------------------------------------------

    @cached_property
    def _ridge_index(self) -> Dict[Face, Tuple[int, ...]]:
        index: Dict[Face, List[int]] = defaultdict(list)
        for i, facet in enumerate(self._facets):
            for p in range(len(facet)):
                index[Face.trusted(facet[:p] + facet[p + 1:])].append(i)
        return {ridge: tuple(ids) for ridge, ids in index.items()}

    def ridge_facets(self) -> Dict[Face, Tuple[int, ...]]:
        """Map each ridge to the indices of the facets containing it."""
        self.require_pure()
        return self._ridge_index

    def dual_graph(self) -> DualGraph:
        """Facets as nodes, joined when they share a codimension-one face."""
        self.require_pure()
        edges: List[Tuple[int, int]] = []
        ridges: List[Face] = []
        for ridge, ids in sorted(self._ridge_index.items()):
            for i, j in combinations(ids, 2):
                edges.append((i, j))
                ridges.append(ridge)
        order = sorted(range(len(edges)), key=lambda k: edges[k])
        return DualGraph(
            nodes=self._facets,
            edges=tuple(edges[k] for k in order),
            ridges=tuple(ridges[k] for k in order),
        )

    def classify_pseudo(self) -> PseudoClass:
        self.require_pure()
        if any(len(ids) >= 3 for ids in self._ridge_index.values()):
            return PseudoClass.NOT_WEAK
        if self.dual_graph().is_connected():
            return PseudoClass.PSEUDOMANIFOLD
        return PseudoClass.WEAK_PSEUDOMANIFOLD

    def boundary(self) -> "Complex":
        """Ridges lying in exactly one facet; empty when the complex is closed."""
        if self.classify_pseudo() is PseudoClass.NOT_WEAK:
            raise NotWeakError("Boundary needs a weak pseudomanifold")
        return Complex.from_canonical(
            ridge for ridge, ids in self._ridge_index.items() if len(ids) == 1
        )

    def is_closed(self) -> bool:
        return self.is_pure and all(len(ids) == 2 for ids in self._ridge_index.values())

    # ------------------------------------------------------------------
    # derived complexes
    # ------------------------------------------------------------------

    def is_neighborly(self, l: int = 2) -> bool:
        """True iff every l-subset of vertices is a face."""
        if l < 1:
            raise ValueError("l must be positive")
        return len(self.faces(l - 1)) == comb(self.n_vertices, l)

    def induced(self, vertices: Iterable[int]) -> "Complex":
        """Subcomplex of all faces whose vertices lie in ``vertices``."""
        keep = set(vertices)
        unknown = keep - self.vertex_set
        if unknown:
            raise UnknownVertexError(f"Vertices {sorted(unknown)} not in complex")
        return Complex(
            tuple(v for v in facet if v in keep) for facet in self._facets
        )

    def skeleton(self, j: int) -> "Complex":
        """Complex of all faces of dimension at most j."""
        if j >= self.dimension:
            return self
        return Complex(
            f for facet in self._facets for f in combinations(facet, min(j + 1, len(facet)))
        )

    def cone(self, apex: int) -> "Complex":
        if apex in self.vertex_set:
            raise ValueError(f"Apex {apex} already a vertex")
        return Complex(tuple(facet) + (apex,) for facet in self._facets)

    def relabel(self, mapping: Mapping[int, int]) -> "Complex":
        """Apply an injective relabeling; vertices missing from ``mapping`` keep their label."""
        images = [mapping.get(v, v) for v in self.vertices]
        if len(set(images)) != len(images):
            raise ValueError("Relabeling is not injective on the vertex set")
        return Complex.from_canonical(
            Face.trusted(tuple(sorted(mapping.get(v, v) for v in facet))) for facet in self._facets
        )

    def disjoint_union(self, other: "Complex", offset: Optional[int] = None) -> "Complex":
        """Union with ``other`` shifted past this complex's labels."""
        if offset is None:
            offset = max(self.vertex_set, default=-1) + 1
        shifted = (tuple(v + offset for v in f) for f in other.facets)
        return Complex(list(self._facets) + list(shifted))

    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Complex) and self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __iter__(self):
        return iter(self._facets)

    def __len__(self) -> int:
        return len(self._facets)

    def __repr__(self) -> str:
        return f"Complex(dim={self.dimension}, f0={self.n_vertices}, facets={len(self._facets)})"


# ----------------------------------------------------------------------
# functional interface
# ----------------------------------------------------------------------

def build_complex(raw_facets: Iterable[Iterable[int]]) -> Complex:
    """
    Build a complex from raw vertex-label sets.

    Args:
        raw_facets: collection of non-empty label sets

    Returns:
        Complex with canonical, pairwise non-nested facets

    Raises:
        EmptyComplexError: If the collection is empty
        ValueError: If a set is empty or a label is negative
    """
    raw = [list(f) for f in raw_facets]
    if not raw:
        raise EmptyComplexError("No facets given")
    for facet in raw:
        if not facet:
            raise ValueError("Facets must be non-empty")
    complex_ = Complex(raw)
    if not complex_.is_pure:
        logger.debug(f"Built non-pure complex {complex_}")
    return complex_


def f_vector(X: Complex) -> FVector:
    return X.f_vector()


def link(X: Complex, face: Iterable[int]) -> Complex:
    return X.link(face)


def star(X: Complex, face: Iterable[int]) -> Complex:
    return X.star(face)


def dual_graph(X: Complex) -> DualGraph:
    return X.dual_graph()


def classify_pseudo(X: Complex) -> PseudoClass:
    return X.classify_pseudo()


def boundary(X: Complex) -> Complex:
    return X.boundary()


def is_l_neighborly(X: Complex, l: int) -> bool:
    return X.is_neighborly(l)
