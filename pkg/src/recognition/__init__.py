"""
Recognition of stacked balls and spheres, Walkup class membership and the
tightness criteria built on them.
"""

from .stacked import (
    ClassVerdict,
    StackedSphereResult,
    in_walkup_K,
    in_walkup_Kbar,
    is_stacked_ball,
    is_stacked_sphere,
    stacked_ball_counts,
    tree_vertex_bound,
)
from .tightness import (
    boundary_consistency,
    cached_betti,
    novik_swartz_bound,
    tight_neighborly,
    tightness_certificate,
)

__all__ = [
    "ClassVerdict",
    "StackedSphereResult",
    "in_walkup_K",
    "in_walkup_Kbar",
    "is_stacked_ball",
    "is_stacked_sphere",
    "stacked_ball_counts",
    "tree_vertex_bound",
    "boundary_consistency",
    "cached_betti",
    "novik_swartz_bound",
    "tight_neighborly",
    "tightness_certificate",
]
