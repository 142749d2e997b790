"""
Brute-force reference implementations for cross-checking the optimized code.

Only the facet list of a complex is used; faces, boundary maps and ball
recognition are recomputed here from scratch with different algorithms.
"""

import logging
from typing import Dict, FrozenSet, List, Optional, Set

from src.homology.betti import BettiVector
from src.models.complex import Complex
from src.models.errors import TooLargeError
from src.utils.config import get_config

logger = logging.getLogger(__name__)


def naive_faces(X: Complex) -> Dict[int, Set[FrozenSet[int]]]:
    """All non-empty faces by dimension, from the power set of every facet."""
    faces: Dict[int, Set[FrozenSet[int]]] = {}
    for facet in X.facets:
        verts = list(facet)
        for mask in range(1, 1 << len(verts)):
            face = frozenset(verts[b] for b in range(len(verts)) if mask >> b & 1)
            faces.setdefault(len(face) - 1, set()).add(face)
    return faces


def naive_f_vector(X: Complex) -> List[int]:
    faces = naive_faces(X)
    return [len(faces[j]) for j in sorted(faces)]


def _rank(rows: List[int]) -> int:
    """Rank over GF(2) of rows packed into Python ints, by leading-bit elimination."""
    pivots: Dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = row
                break
            row ^= pivots[lead]
    return len(pivots)


def naive_betti(X: Complex, cap: Optional[int] = None) -> BettiVector:
    """
    Reduced-free GF(2) Betti numbers from explicitly built boundary rows.

    Raises:
        TooLargeError: If the number of faces exceeds ``oracle.max_faces``
    """
    if cap is None:
        cap = int(get_config().get_oracle_config().get("max_faces", 200_000))
    faces = naive_faces(X)
    total = sum(len(layer) for layer in faces.values())
    if total > cap:
        raise TooLargeError(f"{total} faces exceed oracle cap {cap}", size=total, cap=cap)
    if not faces:
        return BettiVector(())

    top = max(faces)
    ordered = {j: sorted(faces[j], key=sorted) for j in range(top + 1)}
    index = {j: {f: k for k, f in enumerate(ordered[j])} for j in range(top + 1)}
    ranks = [0] * (top + 2)
    for j in range(1, top + 1):
        rows = []
        for face in ordered[j]:
            row = 0
            for v in face:
                row |= 1 << index[j - 1][face - {v}]
            rows.append(row)
        ranks[j] = _rank(rows)
    values = tuple(len(ordered[j]) - ranks[j] - ranks[j + 1] for j in range(top + 1))
    return BettiVector(values)


def naive_stacked_ball(X: Complex, cap: Optional[int] = None) -> bool:
    """
    Search for a facet order in which every facet after the first meets the
    previous ones in the closure of one of its ridges.

    Equivalently each new facet brings exactly one new vertex and the ridge
    opposite to it already lies in exactly one placed facet. Failed partial
    orders are memoized by their set of used facets.

    Raises:
        TooLargeError: If there are more than ``oracle.max_shelling_facets`` facets
    """
    if cap is None:
        cap = int(get_config().get_oracle_config().get("max_shelling_facets", 12))
    facets = [frozenset(f) for f in X.facets]
    if len(facets) > cap:
        raise TooLargeError(f"{len(facets)} facets exceed shelling cap {cap}", size=len(facets), cap=cap)
    if not facets or len({len(f) for f in facets}) != 1:
        return False

    failed: Set[FrozenSet[int]] = set()

    def attachable(used: FrozenSet[int], k: int) -> bool:
        placed = [facets[i] for i in used]
        seen = set().union(*placed)
        new = facets[k] - seen
        if len(new) != 1:
            return False
        ridge = facets[k] - new
        return sum(ridge <= f for f in placed) == 1

    def extend(used: FrozenSet[int]) -> bool:
        if len(used) == len(facets):
            return True
        if used in failed:
            return False
        for k in range(len(facets)):
            if k not in used and attachable(used, k) and extend(used | {k}):
                return True
        failed.add(used)
        return False

    return any(extend(frozenset([start])) for start in range(len(facets)))
