"""
Stacked balls, stacked spheres and Walkup's classes.

A pure complex is a stacked ball iff its dual graph is a tree and
f_0 = f_d + d. A closed complex is a stacked sphere iff repeated reverse
0-moves (removing a vertex whose link is the boundary of a simplex and
filling the hole with that simplex) reduce it to the boundary of a simplex.

In a stacked d-sphere with d >= 2 and more than d + 2 vertices every
degree-(d+1) vertex is removable and removal keeps the sphere stacked, so
taking candidates in ascending label order never rejects a stacked sphere.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from src.models.complex import Complex, Face
from src.models.errors import DimOutOfRangeError, NotClosedError, NotPureError

logger = logging.getLogger(__name__)


@dataclass
class StackedSphereResult:
    """
    Outcome of the reverse 0-move reduction.

    Attributes:
        stacked: whether the reduction reached the boundary of a simplex
        trace: removed vertices in order
        reason: why the reduction stopped, when it failed
    """
    stacked: bool
    trace: List[int] = field(default_factory=list)
    reason: str = ""

    def __bool__(self) -> bool:
        return self.stacked


@dataclass
class ClassVerdict:
    """
    Membership in K(d) or K-bar(d).

    Attributes:
        verdict: true iff every vertex link passed
        per_vertex_evidence: vertex -> sub-verdict and supporting data
    """
    verdict: bool
    per_vertex_evidence: Dict[int, Dict[str, object]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict

    def failing_vertices(self) -> List[int]:
        return [v for v, ev in self.per_vertex_evidence.items() if not ev.get("ok")]


def stacked_ball_counts(X: Complex) -> Dict[str, object]:
    """Quantities of the tree criterion: f_0, f_d + d and whether the dual graph is a tree."""
    X.require_pure()
    d = X.dimension
    return {
        "f0": X.n_vertices,
        "fd_plus_d": len(X.facets) + d,
        "dual_tree": X.dual_graph().is_tree(),
    }


def is_stacked_ball(X: Complex) -> bool:
    """
    True iff X is a stacked ball: tree dual graph and f_0 = f_d + d.

    Raises:
        NotPureError: If X is not pure
    """
    if not X.is_pure:
        raise NotPureError("Stacked-ball test needs a pure complex")
    if X.is_empty:
        return False
    counts = stacked_ball_counts(X)
    return bool(counts["dual_tree"]) and counts["f0"] == counts["fd_plus_d"]


def tree_vertex_bound(X: Complex) -> Tuple[int, int, bool]:
    """
    For a pure complex with tree dual graph: (f_0, f_d + d, f_0 <= f_d + d).

    Raises:
        ValueError: If the dual graph is not a tree
    """
    counts = stacked_ball_counts(X)
    if not counts["dual_tree"]:
        raise ValueError("Dual graph is not a tree")
    f0, bound = int(counts["f0"]), int(counts["fd_plus_d"])
    return f0, bound, f0 <= bound


def _is_single_cycle(X: Complex) -> bool:
    degrees = [len(X.facets_containing((v,))) for v in X.vertices]
    return all(deg == 2 for deg in degrees) and X.is_connected()


def is_stacked_sphere(X: Complex) -> StackedSphereResult:
    """
    Recognize stacked spheres by reverse 0-moves.

    Args:
        X: pure closed weak pseudomanifold of dimension d >= 1

    Returns:
        StackedSphereResult with the removal trace

    Raises:
        NotClosedError: If X has non-empty boundary
        DimOutOfRangeError: If dim(X) < 1
    """
    X.require_pure()
    d = X.dimension
    if d < 1:
        raise DimOutOfRangeError(f"Stacked-sphere test needs dimension >= 1, got {d}")
    if not X.boundary().is_empty:
        raise NotClosedError("Stacked-sphere test needs a closed complex")

    if d == 1:
        ok = _is_single_cycle(X)
        return StackedSphereResult(ok, reason="" if ok else "not a single cycle")

    facets: Set[Face] = set(X.facets)
    star: Dict[int, Set[Face]] = {v: set() for v in X.vertices}
    for facet in facets:
        for v in facet:
            star[v].add(facet)
    trace: List[int] = []

    while len(star) > d + 2:
        removable: Optional[int] = None
        for v in sorted(star):
            around = star[v]
            if len(around) != d + 1:
                continue
            link_vertices = set().union(*around) - {v}
            if len(link_vertices) == d + 1:
                removable = v
                break
        if removable is None:
            return StackedSphereResult(False, trace, reason="no vertex with simplex-boundary link")

        around = star.pop(removable)
        filler = Face.trusted(tuple(sorted(set().union(*around) - {removable})))
        if filler in facets:
            return StackedSphereResult(False, trace, reason=f"filler {tuple(filler)} already a facet")
        for facet in around:
            facets.discard(facet)
            for u in facet:
                if u != removable:
                    star[u].discard(facet)
        facets.add(filler)
        for u in filler:
            star[u].add(filler)
        trace.append(removable)
        logger.debug(f"Reverse 0-move removed vertex {removable}")

    remaining = sorted(star)
    expected = {Face.trusted(c) for c in combinations(remaining, d + 1)}
    if len(remaining) == d + 2 and facets == expected:
        return StackedSphereResult(True, trace)
    return StackedSphereResult(False, trace, reason="reduction ended away from a simplex boundary")


def in_walkup_K(X: Complex) -> ClassVerdict:
    """Every vertex link is a stacked (d-1)-sphere."""
    return _walkup(X, spheres=True)


def in_walkup_Kbar(X: Complex) -> ClassVerdict:
    """Every vertex link is a stacked (d-1)-ball."""
    return _walkup(X, spheres=False)


def _walkup(X: Complex, spheres: bool) -> ClassVerdict:
    X.require_pure()
    if X.dimension < 2:
        raise DimOutOfRangeError(f"Walkup class test needs dimension >= 2, got {X.dimension}")
    evidence: Dict[int, Dict[str, object]] = {}
    for v in X.vertices:
        lk = X.link((v,))
        if spheres:
            result = is_stacked_sphere(lk)
            evidence[v] = {"ok": result.stacked, "link_f0": lk.n_vertices, "trace_length": len(result.trace)}
            if not result.stacked:
                evidence[v]["reason"] = result.reason
        else:
            counts = stacked_ball_counts(lk)
            ok = bool(counts["dual_tree"]) and counts["f0"] == counts["fd_plus_d"]
            evidence[v] = {"ok": ok, **counts}
    verdict = all(ev["ok"] for ev in evidence.values())
    kind = "K" if spheres else "K-bar"
    logger.info(f"{X} in {kind}({X.dimension}): {verdict}")
    return ClassVerdict(verdict, evidence)
