"""
MatroidKit - exact matroid coloring and (b,c)-decomposition toolkit

GF(2) linear algebra, rank-oracle matroids, coloring, flats of the binary
matroid and the decomposition engine, driven from a scriptable command line.
"""

__version__ = "0.1.0"
__author__ = "Development Team"
__license__ = "GNU GPL v3.0"
