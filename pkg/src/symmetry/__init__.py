"""
Symmetry module: vertex permutations, automorphism groups, isomorphism search
and the cyclic vertex-transitive action.
"""

from src.symmetry.permutation import (
    GroupDescription,
    VertexPermutation,
    closure,
    induced_facet_map,
    is_automorphism,
    is_isomorphism,
    orbit,
)
from src.symmetry.search import (
    ROW0,
    automorphism_group,
    invariant_profile,
    isomorphic,
    link_cycle,
    same_cycle,
    verify_cyclic_action,
)

__all__ = [
    "GroupDescription",
    "VertexPermutation",
    "closure",
    "induced_facet_map",
    "is_automorphism",
    "is_isomorphism",
    "orbit",
    "ROW0",
    "automorphism_group",
    "invariant_profile",
    "isomorphic",
    "link_cycle",
    "same_cycle",
    "verify_cyclic_action",
]
