"""
Families of induced subtrees of a host graph and the complexes they define.

Given induced subtrees T_0..T_{n-1} of a graph G, every host vertex u defines
the set u_hat = {i : u in T_i}. When (i) any two members intersect, (ii) each
host vertex lies in exactly D+1 members and (iii) |u_hat & v_hat| = D exactly
for host edges uv, the sets u_hat are the facets of an n-vertex neighborly
D-dimensional complex in K-bar(D) whose dual graph is G.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from src.models.certificate import Certificate, CheckResult, CheckVerdict
from src.models.complex import Complex, Face
from src.models.errors import ConstructionBugError, HypothesesNotVerifiedError
from src.trees.host_graph import HostGraph, HostVertex, alpha, graph_G, mu, sigma

logger = logging.getLogger(__name__)


class TreeVariant(Enum):
    """Which member formula to use."""
    T1 = "T1"  # yields the M fillings
    T2 = "T2"  # yields the N fillings


@dataclass
class TreeFamily:
    """
    Indexed family of vertex subsets of a host graph.

    Attributes:
        host: the host graph
        members: T_0..T_{n-1} as vertex sets
        variant: formula the members were built from
    """
    host: HostGraph
    members: Tuple[FrozenSet[HostVertex], ...]
    variant: TreeVariant

    def hat_set(self, u: HostVertex) -> FrozenSet[int]:
        return frozenset(i for i, member in enumerate(self.members) if u in member)

    def hat_sets(self) -> Dict[HostVertex, FrozenSet[int]]:
        hats: Dict[HostVertex, set] = {u: set() for u in self.host.vertices}
        for i, member in enumerate(self.members):
            for u in member:
                hats.setdefault(u, set()).add(i)
        return {u: frozenset(s) for u, s in hats.items()}

    def hat_distance(self, u: HostVertex, v: HostVertex) -> int:
        """|u_hat minus v_hat|."""
        return len(self.hat_set(u) - self.hat_set(v))

    def member_graph(self, i: int) -> nx.Graph:
        return self.host.graph.subgraph(self.members[i])

    def truncated(self, i: int, u: HostVertex) -> "TreeFamily":
        """Copy with host vertex u removed from member i."""
        members = list(self.members)
        members[i] = members[i] - {u}
        return TreeFamily(self.host, tuple(members), self.variant)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "variant": self.variant.value,
            "host": self.host.to_dict(),
            "members": [sorted(str(u) for u in member) for member in self.members],
        }


def _member(d: int, n: int, i: int, variant: TreeVariant) -> FrozenSet[HostVertex]:
    vertices = set()
    vertices.update(sigma(i + j, n) for j in range(d + 2))
    vertices.update(mu(i + j * (d + 3), n) for j in range(d + 2))
    vertices.update(alpha(j, i, n) for j in range(1, d + 1))
    for k in range(2, d + 2):
        vertices.update(alpha(j, i + k, n) for j in range(1, d + 3 - k))
        low = d + 2 - k if variant is TreeVariant.T1 else k - 1
        vertices.update(alpha(j, i + k * (d + 3), n) for j in range(low, d + 1))
    return frozenset(vertices)


def tree_family(d: int, variant: TreeVariant = TreeVariant.T1) -> TreeFamily:
    """
    Build T1 or T2 on G^d and check that every member induces a tree on n-d-1 vertices.

    Raises:
        DimOutOfRangeError: If d < 2
        ConstructionBugError: If a member fails its own validation
    """
    variant = TreeVariant(variant)
    host = graph_G(d)
    n = host.n
    members = tuple(_member(d, n, i, variant) for i in range(n))
    for i, member in enumerate(members):
        if len(member) != n - d - 1:
            raise ConstructionBugError(f"{variant.value} member {i} has {len(member)} vertices, expected {n - d - 1}")
        if not nx.is_tree(host.graph.subgraph(member)):
            raise ConstructionBugError(f"{variant.value} member {i} does not induce a tree")
    logger.info(f"Built tree family {variant.value} on {host}")
    return TreeFamily(host, members, variant)


def verify_family(G: HostGraph, T: TreeFamily, D: int) -> Certificate:
    """
    Check the hypotheses under which the sets u_hat form a D-dimensional complex.

    Sub-checks: members are induced trees on n - D vertices, members pairwise
    intersect, each host vertex lies in exactly D + 1 members, and
    |u_hat & v_hat| = D iff uv is a host edge (full double loop).
    """
    n = len(T.members)
    certificate = Certificate(
        subject=f"tree family {T.variant.value} on {G}",
        parameters={"d": G.d, "n": n, "D": D, "variant": T.variant.value},
    )

    bad_trees = [
        i for i, member in enumerate(T.members)
        if len(member) != n - D or not nx.is_tree(G.graph.subgraph(member))
    ]
    certificate.add(CheckResult.build(
        "induced-trees",
        CheckVerdict.PASS if not bad_trees else CheckVerdict.FAIL,
        summary=f"{n - len(bad_trees)}/{n} members induce trees on {n - D} vertices",
        witness={"failing_members": bad_trees},
    ))

    disjoint = [(i, j) for i, j in combinations(range(n), 2) if not (T.members[i] & T.members[j])]
    certificate.add(CheckResult.build(
        "pairwise-intersecting",
        CheckVerdict.PASS if not disjoint else CheckVerdict.FAIL,
        summary=f"{len(disjoint)} disjoint pairs",
        witness={"disjoint_pairs": [list(p) for p in disjoint]},
    ))

    hats = T.hat_sets()
    wrong_count = [str(u) for u in G.vertices if len(hats.get(u, ())) != D + 1]
    certificate.add(CheckResult.build(
        "membership-count",
        CheckVerdict.PASS if not wrong_count else CheckVerdict.FAIL,
        summary=f"{len(wrong_count)} host vertices not in exactly {D + 1} members",
        witness={"vertices": wrong_count},
    ))

    mismatched: List[List[str]] = []
    vertices = G.vertices
    for u, v in combinations(vertices, 2):
        meets_in_ridge = len(hats.get(u, frozenset()) & hats.get(v, frozenset())) == D
        if meets_in_ridge != G.has_edge(u, v):
            mismatched.append([str(u), str(v)])
    certificate.add(CheckResult.build(
        "edge-intersections",
        CheckVerdict.PASS if not mismatched else CheckVerdict.FAIL,
        summary=f"{len(mismatched)} host vertex pairs violate |u_hat & v_hat| = {D} iff adjacent",
        witness={"pairs": mismatched},
    ))
    logger.info(f"Tree family {T.variant.value} hypotheses: {certificate.verdict.value}")
    return certificate


def complex_from_family(G: HostGraph, T: TreeFamily, D: Optional[int] = None) -> Complex:
    """
    The complex whose facets are u_hat for the host vertices u.

    The hypotheses are re-verified first; D defaults to d + 1.

    Raises:
        HypothesesNotVerifiedError: If any hypothesis check fails
    """
    if D is None:
        D = G.d + 1
    certificate = verify_family(G, T, D)
    if not certificate.passed:
        failing = [c.name for c in certificate.checks if not c.passed]
        raise HypothesesNotVerifiedError(f"Tree family fails {failing}")
    hats = T.hat_sets()
    return Complex.from_canonical(Face(hats[u]) for u in G.vertices)


def facet_correspondence(G: HostGraph, T: TreeFamily) -> Dict[HostVertex, Face]:
    """Host vertex -> the facet u_hat it defines."""
    hats = T.hat_sets()
    return {u: Face(hats[u]) for u in G.vertices}
