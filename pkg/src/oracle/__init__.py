"""
Oracle module: brute-force reference implementations used by the tests.
"""

from src.oracle.brute_force import naive_betti, naive_f_vector, naive_faces, naive_stacked_ball

__all__ = ["naive_betti", "naive_f_vector", "naive_faces", "naive_stacked_ball"]
