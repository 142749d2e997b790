"""
Homology over the two-element field.

This package contains the bit-packed matrix type, Betti number computation
and the induced-subcomplex injectivity checks behind tightness.
"""

from .gf2_matrix import Gf2Matrix
from .betti import BettiVector, betti, boundary_matrix, induced
from .spotcheck import (
    InducedHomologyChecker,
    InjectivityResult,
    check_induced_injectivity,
    sample_subsets,
    tightness_spotcheck,
)

__all__ = [
    "Gf2Matrix",
    "BettiVector",
    "betti",
    "boundary_matrix",
    "induced",
    "InducedHomologyChecker",
    "InjectivityResult",
    "check_induced_injectivity",
    "sample_subsets",
    "tightness_spotcheck",
]
