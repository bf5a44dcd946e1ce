"""
Core matroid functionality.

GF(2) kernels, rank-oracle matroids, coloring and binary-matroid flats. The
decomposition engine lives in the ``decomp`` sub-package.
"""

from .errors import ColoringError, MatroidInputError, MatroidKitError, RefusalError
from .gf2core import Gf2Rref, Gf2Vec, gf2_rank, gf2_rref, gf2_span_nonzero
from .matroids import (
    BinaryMatroid,
    MatroidOracle,
    PartitionMatroid,
    RestrictedMatroid,
    UniformMatroid,
    binary_matroid,
    closure,
    is_independent,
    partition_matroid,
    restrict,
    uniform_matroid,
)
from .coloring import Coloring, InfeasibleColoring, color, coloring_number, coloring_number_density
from .flats import Flat, count_flats_exact, enumerate_flats, flat_count_lower_bound, flats_through_pair

__all__ = [
    'ColoringError',
    'MatroidInputError',
    'MatroidKitError',
    'RefusalError',
    'Gf2Rref',
    'Gf2Vec',
    'gf2_rank',
    'gf2_rref',
    'gf2_span_nonzero',
    'BinaryMatroid',
    'MatroidOracle',
    'PartitionMatroid',
    'RestrictedMatroid',
    'UniformMatroid',
    'binary_matroid',
    'closure',
    'is_independent',
    'partition_matroid',
    'restrict',
    'uniform_matroid',
    'Coloring',
    'InfeasibleColoring',
    'color',
    'coloring_number',
    'coloring_number_density',
    'Flat',
    'count_flats_exact',
    'enumerate_flats',
    'flat_count_lower_bound',
    'flats_through_pair',
]
