"""
Test suite for the tight triangulation toolkit.
"""
