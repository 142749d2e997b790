"""
The host graph G^d: two n-cycles joined by n disjoint paths.

    C_1 = sigma_0 sigma_1 ... sigma_{n-1} sigma_0
    C_2 = mu_0 mu_{d+3} mu_{2(d+3)} ... mu_0
    P_i = sigma_i alpha_{1,i} ... alpha_{d,i} mu_i

Host vertices share their names with the facets of the family fillings, so
the node sigma_i of G^d corresponds to the facet sigma_i.
"""

import logging
from typing import Any, Dict, List, Tuple

import networkx as nx

from src.generators.families import FacetKind, FacetLabel, family_size
from src.models.errors import DimOutOfRangeError

logger = logging.getLogger(__name__)

HostKind = FacetKind
HostVertex = FacetLabel


def sigma(i: int, n: int) -> HostVertex:
    return HostVertex(HostKind.SIGMA, 0, i % n)


def mu(i: int, n: int) -> HostVertex:
    return HostVertex(HostKind.MU, 0, i % n)


def alpha(k: int, i: int, n: int) -> HostVertex:
    return HostVertex(HostKind.ALPHA, k, i % n)


class HostGraph:
    """
    Labeled host graph over networkx.

    Vertices are ordered by (kind, k, i) everywhere.
    """

    def __init__(self, d: int, graph: nx.Graph):
        self.d = d
        self.n = family_size(d)
        self.graph = graph

    @property
    def vertices(self) -> List[HostVertex]:
        return sorted(self.graph.nodes())

    @property
    def edges(self) -> List[Tuple[HostVertex, HostVertex]]:
        return sorted(tuple(sorted(e)) for e in self.graph.edges())

    def number_of_vertices(self) -> int:
        return self.graph.number_of_nodes()

    def number_of_edges(self) -> int:
        return self.graph.number_of_edges()

    def has_edge(self, u: HostVertex, v: HostVertex) -> bool:
        return self.graph.has_edge(u, v)

    def path(self, i: int) -> List[HostVertex]:
        """P_i from sigma_i to mu_i."""
        n = self.n
        return [sigma(i, n)] + [alpha(k, i, n) for k in range(1, self.d + 1)] + [mu(i, n)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "n": self.n,
            "vertices": [str(v) for v in self.vertices],
            "edges": [[str(u), str(v)] for u, v in self.edges],
        }

    def __repr__(self) -> str:
        return f"HostGraph(d={self.d}, vertices={self.number_of_vertices()}, edges={self.number_of_edges()})"


def graph_G(d: int) -> HostGraph:
    """
    Build G^d on n(d+2) vertices with n(d+3) edges.

    Raises:
        DimOutOfRangeError: If d < 2
    """
    if d < 2:
        raise DimOutOfRangeError(f"Host graph needs d >= 2, got {d}")
    n = family_size(d)
    g = nx.Graph()
    for i in range(n):
        g.add_edge(sigma(i, n), sigma(i + 1, n))
        g.add_edge(mu(i, n), mu(i + d + 3, n))
        path = [sigma(i, n)] + [alpha(k, i, n) for k in range(1, d + 1)] + [mu(i, n)]
        nx.add_path(g, path)
    host = HostGraph(d, g)
    logger.info(f"Built {host}")
    return host
