"""
(b,c)-decomposition engine.

Provides:
- Partition, parameter and report types
- A complete transversal verifier and certificate replay
- Flat witnesses, covering reports and covering capacity
- Dimension thresholds from the counting argument
- Exhaustive search for small matroids and seeded spot-checks
"""

from .models import (
    DecompParams,
    DecompReport,
    DecompStats,
    Partition,
    SearchOutcome,
    SearchResult,
    Verdict,
)
from .verifier import colorable_selection, confirm_certificate, verify_decomposition
from .covering import (
    CoveringCapacity,
    CoveringReport,
    WitnessScan,
    capacity_bounds,
    covering_capacity,
    covering_report,
    find_flat_witness,
    minimum_uncolorable_rank,
    pair_covering_capacity,
    scan_flat_witness,
)
from .threshold import Threshold, exact_counting_crossover, theorem_threshold
from .searcher import DecompositionSearch, search_decomposition
from .sampling import SpotcheckSummary, random_partition, run_spotcheck

__all__ = [
    'DecompParams',
    'DecompReport',
    'DecompStats',
    'Partition',
    'SearchOutcome',
    'SearchResult',
    'Verdict',
    'colorable_selection',
    'confirm_certificate',
    'verify_decomposition',
    'CoveringCapacity',
    'CoveringReport',
    'WitnessScan',
    'capacity_bounds',
    'covering_capacity',
    'covering_report',
    'find_flat_witness',
    'minimum_uncolorable_rank',
    'pair_covering_capacity',
    'scan_flat_witness',
    'Threshold',
    'exact_counting_crossover',
    'theorem_threshold',
    'DecompositionSearch',
    'search_decomposition',
    'SpotcheckSummary',
    'random_partition',
    'run_spotcheck',
]
