"""
Orientation module: coherent sign propagation and the sphere-bundle parity rule.
"""

from src.orientation.orientability import (
    OrientabilityResult,
    OrientationAssignment,
    bundle_orientable_prediction,
    bundle_parity_check,
    first_incoherent_ridge,
    is_coherent,
    orientability,
    ordered_sign,
)

__all__ = [
    "OrientabilityResult",
    "OrientationAssignment",
    "bundle_orientable_prediction",
    "bundle_parity_check",
    "first_incoherent_ridge",
    "is_coherent",
    "orientability",
    "ordered_sign",
]
