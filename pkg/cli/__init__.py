"""
Command-line interface for the tight triangulation toolkit.
"""
