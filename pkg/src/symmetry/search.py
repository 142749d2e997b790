"""
Isomorphism and automorphism search for pure complexes.

Vertices are coloured by local invariants (degree, link f-vector and the
multiset of facet counts over their edges) and the colouring is refined by
hypergraph colour refinement: a vertex's new colour records the colours of
the other vertices of every facet through it. The search individualizes one
vertex at a time, refines again, and prunes branches whose colour
histograms disagree.

Automorphism groups are computed by orbit-stabilizer along a base. For a
pseudomanifold the vertices of one facet form a base: an automorphism fixing
a facet pointwise fixes every facet adjacent to it, and the dual graph is
connected.
"""

import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from src.models.complex import Complex, PseudoClass
from src.models.errors import ConeNotSupportedError, GroupOrderOverflowError, LabelMismatchError, UnknownVertexError
from src.symmetry.permutation import GroupDescription, VertexPermutation, is_isomorphism, orbit
from src.utils.config import get_config

logger = logging.getLogger(__name__)

Coloring = Dict[int, int]
Stars = Dict[int, List[Tuple[int, ...]]]

# Cyclic order of the neighbours of vertex 0 in three neighborly 19-vertex
# surfaces; equality is up to rotation and reflection.
ROW0: Dict[str, Tuple[int, ...]] = {
    "R": (1, 11, 14, 13, 15, 3, 8, 9, 7, 4, 17, 10, 18, 5, 16, 12, 2, 6),
    "M": (1, 7, 3, 2, 11, 6, 18, 16, 4, 14, 8, 10, 15, 12, 13, 5, 9, 17),
    "N": (1, 12, 3, 2, 6, 11, 18, 16, 9, 5, 13, 15, 10, 7, 8, 14, 4, 17),
}


def verify_cyclic_action(X: Complex, n: int) -> bool:
    """
    True iff i -> i+1 (mod n) maps facets to facets.

    Raises:
        LabelMismatchError: If the vertex set is not {0..n-1}
    """
    if X.vertex_set != frozenset(range(n)):
        raise LabelMismatchError(f"Vertex labels of {X} are not 0..{n - 1}")
    return VertexPermutation.shift(n).apply(X) == X


def vertex_invariant(X: Complex, v: int) -> Tuple:
    multiplicities = X.edge_multiplicities
    around = sorted(
        count for (p, q), count in multiplicities.items() if p == v or q == v
    )
    return (X.degree(v), tuple(X.link((v,)).f_vector().counts), tuple(around))


def invariant_profile(X: Complex) -> Tuple:
    """Relabeling-invariant summary used to reject isomorphism quickly."""
    return (
        X.dimension,
        tuple(X.f_vector().counts),
        tuple(sorted(Counter(X.edge_multiplicities.values()).items())),
        tuple(sorted(X.degree(v) for v in X.vertices)),
    )


def _stars(X: Complex) -> Stars:
    stars: Stars = {v: [] for v in X.vertices}
    for facet in X.facets:
        for v in facet:
            stars[v].append(tuple(u for u in facet if u != v))
    return stars


def refine(stars: Sequence[Stars], colorings: Sequence[Coloring]) -> List[Coloring]:
    """
    Jointly refine colourings of several complexes to a stable partition.

    Colours are renumbered from one shared palette, so equal colours in
    different complexes mean equal refined invariants.
    """
    current = [dict(c) for c in colorings]
    classes = len({c for col in current for c in col.values()})
    while True:
        signatures = [
            {
                v: (col[v], tuple(sorted(tuple(sorted(col[u] for u in others)) for others in star[v])))
                for v in star
            }
            for star, col in zip(stars, current)
        ]
        palette = sorted({s for sig in signatures for s in sig.values()})
        index = {s: k for k, s in enumerate(palette)}
        current = [{v: index[s] for v, s in sig.items()} for sig in signatures]
        if len(palette) == classes:
            return current
        classes = len(palette)


def _initial_colorings(complexes: Sequence[Complex]) -> List[Coloring]:
    invariants = [{v: vertex_invariant(X, v) for v in X.vertices} for X in complexes]
    palette = sorted({inv for table in invariants for inv in table.values()})
    index = {inv: k for k, inv in enumerate(palette)}
    return [{v: index[inv] for v, inv in table.items()} for table in invariants]


class _Matcher:
    """Individualize-and-refine search for isomorphisms from X to Y."""

    def __init__(self, X: Complex, Y: Complex):
        self.X, self.Y = X, Y
        self.stars = (_stars(X), _stars(Y))
        self.nodes = 0

    def _individualize(self, cx: Coloring, cy: Coloring, x: int, y: int) -> Tuple[Coloring, Coloring]:
        fresh = max(max(cx.values()), max(cy.values())) + 1
        cx, cy = dict(cx), dict(cy)
        cx[x] = fresh
        cy[y] = fresh
        return cx, cy

    def search(self, cx: Coloring, cy: Coloring) -> Optional[Dict[int, int]]:
        self.nodes += 1
        cx, cy = refine(self.stars, [cx, cy])
        hist = Counter(cx.values())
        if hist != Counter(cy.values()):
            return None
        if all(size == 1 for size in hist.values()):
            by_color = {c: y for y, c in cy.items()}
            mapping = {x: by_color[c] for x, c in cx.items()}
            if is_isomorphism(self.X, self.Y, VertexPermutation.from_mapping(mapping)):
                return mapping
            return None

        target = min((size, c) for c, size in hist.items() if size > 1)[1]
        x = min(v for v, c in cx.items() if c == target)
        for y in sorted(v for v, c in cy.items() if c == target):
            nx_, ny_ = self._individualize(cx, cy, x, y)
            found = self.search(nx_, ny_)
            if found is not None:
                return found
        return None

    def extend(self, fixed: Sequence[Tuple[int, int]], start: Optional[List[Coloring]] = None) -> Optional[Dict[int, int]]:
        """Search for an isomorphism mapping each x to y for the given pairs."""
        cx, cy = start if start is not None else _initial_colorings([self.X, self.Y])
        for x, y in fixed:
            cx, cy = self._individualize(cx, cy, x, y)
        return self.search(cx, cy)


def isomorphic(X: Complex, Y: Complex) -> Optional[VertexPermutation]:
    """
    A vertex bijection mapping the facets of X onto those of Y, if one exists.

    Different f-vectors, degree sequences or edge-multiplicity profiles decide
    the answer without search.
    """
    if X.is_empty or Y.is_empty:
        return VertexPermutation((), ()) if X.is_empty and Y.is_empty else None
    if invariant_profile(X) != invariant_profile(Y):
        logger.debug(f"{X} and {Y} differ in invariant profile")
        return None
    matcher = _Matcher(X, Y)
    mapping = matcher.extend(())
    logger.info(f"Isomorphism search {X} -> {Y}: {'found' if mapping is not None else 'none'} after {matcher.nodes} nodes")
    return VertexPermutation.from_mapping(mapping) if mapping is not None else None


def _base(X: Complex) -> Tuple[int, ...]:
    if X.is_pure and X.classify_pseudo() is PseudoClass.PSEUDOMANIFOLD:
        return tuple(X.facets[0])
    return X.vertices


def automorphism_group(X: Complex, max_order: Optional[int] = None) -> GroupDescription:
    """
    Generators and exact order of Aut(X).

    Args:
        X: pure pseudomanifold that is not a cone
        max_order: cap on the group order (config ``symmetry.max_group_order``)

    Raises:
        ConeNotSupportedError: If some vertex lies in every facet
        GroupOrderOverflowError: If the order exceeds the cap
    """
    if max_order is None:
        max_order = int(get_config().get_symmetry_config().get("max_group_order", 10_000_000))
    apex = X.cone_apex()
    X.require_pure()
    if apex is not None:
        raise ConeNotSupportedError(apex)

    base = _base(X)
    matcher = _Matcher(X, X)
    start = _initial_colorings([X, X])
    generators: List[VertexPermutation] = []
    sizes: List[int] = []
    order = 1

    # deepest level first, so generators found earlier fix every prefix seen later
    for level in reversed(range(len(base))):
        point = base[level]
        fixed = [(p, p) for p in base[:level]]
        cx, _ = start
        for p, _ in fixed:
            cx, _ = matcher._individualize(cx, cx, p, p)
        colors = refine([matcher.stars[0]], [cx])[0]
        candidates = sorted(v for v, c in colors.items() if c == colors[point])

        current = orbit(point, generators)
        for y in candidates:
            if y in current:
                continue
            mapping = matcher.extend(fixed + [(point, y)], start)
            if mapping is not None:
                generators.append(VertexPermutation.from_mapping(mapping))
                current = orbit(point, generators)
        sizes.append(len(current))
        order *= len(current)
        if order > max_order:
            raise GroupOrderOverflowError(f"|Aut({X})| exceeds cap {max_order}")

    sizes.reverse()
    logger.info(f"Aut({X}) has order {order} with {len(generators)} generators")
    return GroupDescription(generators=generators, order=order, base=base, orbit_sizes=tuple(sizes))


# ----------------------------------------------------------------------
# vertex links of surfaces
# ----------------------------------------------------------------------

def link_cycle(X: Complex, v: int) -> Tuple[int, ...]:
    """
    Cyclic order of the neighbours of v in a 2-dimensional complex.

    Starts at the smallest neighbour and continues towards the smaller of its
    two neighbours in the link.

    Raises:
        UnknownVertexError: If v is not a vertex
        ValueError: If the link of v is not a single cycle
    """
    if v not in X.vertex_set:
        raise UnknownVertexError(f"Vertex {v} not in complex")
    lk = X.link((v,))
    if lk.dimension != 1:
        raise ValueError(f"Link of {v} is not a graph")
    adjacency: Dict[int, List[int]] = {u: [] for u in lk.vertices}
    for p, q in lk.facets:
        adjacency[p].append(q)
        adjacency[q].append(p)
    if any(len(nbrs) != 2 for nbrs in adjacency.values()):
        raise ValueError(f"Link of {v} is not a cycle")

    first = lk.vertices[0]
    order = [first, min(adjacency[first])]
    while len(order) < len(adjacency):
        a, b = adjacency[order[-1]]
        nxt = a if a != order[-2] else b
        if nxt == first:
            break
        order.append(nxt)
    if len(order) != len(adjacency):
        raise ValueError(f"Link of {v} is disconnected")
    return tuple(order)


def same_cycle(a: Sequence[int], b: Sequence[int]) -> bool:
    """Equality of cyclic sequences up to rotation and reflection."""
    if len(a) != len(b) or set(a) != set(b):
        return False
    if not a:
        return True
    a, b = list(a), list(b)
    doubled = b + b
    for candidate in (a, a[::-1]):
        start = candidate[0]
        for k, value in enumerate(b):
            if value == start and doubled[k:k + len(a)] == candidate:
                return True
    return False
