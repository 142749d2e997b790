"""
Trees module: the host graph G^d, the tree families T1 and T2 and the
complexes defined by intersecting families of induced subtrees.
"""

from src.trees.host_graph import HostGraph, HostKind, HostVertex, graph_G
from src.trees.tree_family import (
    TreeFamily,
    TreeVariant,
    complex_from_family,
    facet_correspondence,
    tree_family,
    verify_family,
)

__all__ = [
    "HostGraph",
    "HostKind",
    "HostVertex",
    "graph_G",
    "TreeFamily",
    "TreeVariant",
    "complex_from_family",
    "facet_correspondence",
    "tree_family",
    "verify_family",
]
