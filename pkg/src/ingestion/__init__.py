"""
Input/output layer for the toolkit.

This package reads and writes complexes in the facet-list text format used
by every command-line tool.
"""

from .facet_io import file_digest, format_facets, parse_facets, read_facets, write_facets

__all__ = [
    "file_digest",
    "format_facets",
    "parse_facets",
    "read_facets",
    "write_facets",
]
