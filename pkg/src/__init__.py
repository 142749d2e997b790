"""
Tight Triangulation Toolkit - Main Package.

Constructs infinite families of tight neighborly triangulated manifolds and
certifies their combinatorial and topological properties by exact computation.
"""

__version__ = "1.0.0"
