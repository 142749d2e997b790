"""
Generators module for the named complexes: simplices, path balls, the M and N
families, sphere bundles, handle additions and the handle-addition replays.
"""

from src.generators.families import (
    FacetKind,
    FacetLabel,
    FamilyComplexes,
    family,
    family_M,
    family_N,
    family_size,
)
from src.generators.handles import (
    GluingMap,
    HandleResult,
    UnionFind,
    handle_addition,
    identify_vertices,
    parse_permutation,
    permutation_sign,
    sphere_bundle,
)
from src.generators.replay import cut_open, replay_from_filling, replay_m329
from src.generators.standard import cross_polytope, cycle, path_ball, simplex_ball, simplex_sphere

__all__ = [
    "FacetKind",
    "FacetLabel",
    "FamilyComplexes",
    "family",
    "family_M",
    "family_N",
    "family_size",
    "GluingMap",
    "HandleResult",
    "UnionFind",
    "handle_addition",
    "identify_vertices",
    "parse_permutation",
    "permutation_sign",
    "sphere_bundle",
    "cut_open",
    "replay_from_filling",
    "replay_m329",
    "cross_polytope",
    "cycle",
    "path_ball",
    "simplex_ball",
    "simplex_sphere",
]
