"""
Orientability of closed pseudomanifolds by sign propagation over the dual graph.

Each facet F = (v_0 < ... < v_d) carries a sign s_F standing for
s_F * [v_0, ..., v_d]. Removing v_p induces s_F * (-1)^p on the ridge, and two
facets sharing a ridge are coherent when their induced signs are opposite.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.generators.handles import permutation_sign, sphere_bundle
from src.models.certificate import Certificate, CheckResult, CheckVerdict
from src.models.complex import Complex, Face
from src.models.errors import NotClosedManifoldLikeError, NotConnectedError

logger = logging.getLogger(__name__)


@dataclass
class OrientationAssignment:
    """
    Per-facet signs relative to the increasing vertex order.

    Attributes:
        signs: facet -> +1 or -1
        basepoint: facet whose sign was fixed to +1
    """
    signs: Dict[Face, int]
    basepoint: Face

    def to_dict(self) -> Dict[str, Any]:
        return {
            "basepoint": list(self.basepoint),
            "negative_facets": [list(f) for f, s in sorted(self.signs.items()) if s < 0],
        }


@dataclass
class OrientabilityResult:
    """
    Outcome of sign propagation.

    Attributes:
        orientable: whether a coherent assignment exists
        assignment: the coherent signs when orientable
        witness: closed walk of facets in the dual graph along which the
            propagated sign flips, when non-orientable
    """
    orientable: bool
    assignment: Optional[OrientationAssignment] = None
    witness: List[Face] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.orientable

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"orientable": self.orientable}
        if self.assignment is not None:
            data["assignment"] = self.assignment.to_dict()
        if self.witness:
            data["flip_cycle"] = [list(f) for f in self.witness]
        return data


def ordered_sign(vertices: Sequence[int]) -> Tuple[Face, int]:
    """Face of an ordered vertex tuple and the sign of the permutation sorting it."""
    return Face(vertices), permutation_sign(list(vertices))


def _ridge_position(facet: Face, ridge: Face) -> int:
    missing = next(v for v in facet if v not in ridge)
    return facet.index(missing)


def _closed_dual(X: Complex) -> Dict[int, List[Tuple[int, Face]]]:
    X.require_pure()
    ridges = X.ridge_facets()
    bad = [r for r, ids in ridges.items() if len(ids) != 2]
    if bad:
        raise NotClosedManifoldLikeError(
            f"Ridge {tuple(bad[0])} lies in {len(ridges[bad[0]])} facets ({len(bad)} such ridges)"
        )
    dual = X.dual_graph()
    if not dual.is_connected():
        raise NotConnectedError("Dual graph is disconnected")
    return dual.adjacency()


def orientability(X: Complex, basepoint: int = 0, seed: Optional[int] = None) -> OrientabilityResult:
    """
    Decide orientability by breadth-first sign propagation.

    Args:
        X: pure complex in which every ridge lies in exactly two facets
        basepoint: index of the starting facet
        seed: shuffle the neighbour order with this seed (verdict is unaffected)

    Returns:
        OrientabilityResult with a coherent assignment, or with the shortest
        sign-flipping cycle through the BFS tree among all conflicting ridges

    Raises:
        NotClosedManifoldLikeError: If some ridge is not in exactly two facets
        NotConnectedError: If the dual graph is disconnected
    """
    adjacency = _closed_dual(X)
    facets = X.facets
    rng = np.random.default_rng(seed) if seed is not None else None

    signs: Dict[int, int] = {basepoint: 1}
    parent: Dict[int, Optional[int]] = {basepoint: None}
    depth: Dict[int, int] = {basepoint: 0}
    conflicts: List[Tuple[int, int]] = []
    queue = deque([basepoint])
    while queue:
        i = queue.popleft()
        neighbours = list(adjacency[i])
        if rng is not None:
            neighbours = [neighbours[k] for k in rng.permutation(len(neighbours))]
        for j, ridge in neighbours:
            p = _ridge_position(facets[i], ridge)
            q = _ridge_position(facets[j], ridge)
            wanted = -signs[i] * (-1) ** (p + q)
            if j not in signs:
                signs[j] = wanted
                parent[j] = i
                depth[j] = depth[i] + 1
                queue.append(j)
            elif signs[j] != wanted:
                conflicts.append((i, j))

    if not conflicts:
        assignment = OrientationAssignment({facets[k]: s for k, s in signs.items()}, facets[basepoint])
        logger.info(f"{X} is orientable")
        return OrientabilityResult(True, assignment=assignment)

    cycle = min((_tree_cycle(parent, depth, i, j) for i, j in conflicts), key=len)
    logger.info(f"{X} is non-orientable; flip cycle of length {len(cycle)}")
    return OrientabilityResult(False, witness=[facets[k] for k in cycle])


def _tree_cycle(parent: Mapping[int, Optional[int]], depth: Mapping[int, int], i: int, j: int) -> List[int]:
    """Cycle closed by the non-tree edge ij: path i -> lca -> j."""
    left, right = [i], [j]
    a, b = i, j
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    return left + right[-2::-1]


def is_coherent(X: Complex, signs: Mapping[Face, int]) -> bool:
    """True iff the signs induce opposite orientations on every shared ridge."""
    return first_incoherent_ridge(X, signs) is None


def first_incoherent_ridge(X: Complex, signs: Mapping[Face, int]) -> Optional[Face]:
    for ridge, ids in sorted(X.ridge_facets().items()):
        if len(ids) != 2:
            continue
        f, g = (X.facets[k] for k in ids)
        induced_f = signs[f] * (-1) ** _ridge_position(f, ridge)
        induced_g = signs[g] * (-1) ** _ridge_position(g, ridge)
        if induced_f + induced_g != 0:
            return ridge
    return None


def bundle_orientable_prediction(d: int, m: int, sigma: Sequence[int]) -> bool:
    """(md even and sigma even) or (md odd and sigma odd)."""
    even = permutation_sign(sigma) == 1
    return even if (m * d) % 2 == 0 else not even


def bundle_parity_check(d: int, m: int, sigma: Sequence[int]) -> Certificate:
    """
    Compare the orientability of X^d_m(sigma) with the parity rule.

    Raises:
        InadmissibleGluingError: If the gluing is not admissible
    """
    sigma = tuple(sigma)
    X = sphere_bundle(d, m, sigma)
    predicted = bundle_orientable_prediction(d, m, sigma)
    actual = orientability(X).orientable
    agree = predicted == actual
    certificate = Certificate(
        subject=f"X^{d}_{m}",
        parameters={"d": d, "m": m, "sigma": list(sigma)},
    )
    certificate.add(CheckResult.build(
        "bundle-parity",
        CheckVerdict.PASS if agree else CheckVerdict.FAIL,
        summary=f"orientable={actual}, parity rule predicts {predicted}",
        witness={
            "md": m * d,
            "sigma_even": permutation_sign(sigma) == 1,
            "predicted": predicted,
            "orientable": actual,
        },
    ))
    return certificate
