"""
Data models for the toolkit.

This package contains the simplicial complex types, the exception hierarchy
and the certificate schema shared by every other package.
"""

from .complex import (
    Complex,
    DualGraph,
    Face,
    FVector,
    PseudoClass,
    boundary,
    build_complex,
    classify_pseudo,
    dual_graph,
    f_vector,
    is_l_neighborly,
    link,
    star,
)
from .certificate import Certificate, CheckResult, CheckVerdict

__all__ = [
    "Complex",
    "DualGraph",
    "Face",
    "FVector",
    "PseudoClass",
    "boundary",
    "build_complex",
    "classify_pseudo",
    "dual_graph",
    "f_vector",
    "is_l_neighborly",
    "link",
    "star",
    "Certificate",
    "CheckResult",
    "CheckVerdict",
]
