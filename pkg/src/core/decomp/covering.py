"""
Covered flats and the counting argument.

A flat is covered by a part when the part holds at least two of its elements.
An uncovered flat of rank d with (2^d - 1)/d > b sits in pairwise distinct
parts, so it extends to a transversal that is not b-colorable: that flat is a
witness against the partition. The capacity functions bound how many flats a
partition can cover at all.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Optional, Tuple

from ..errors import MatroidInputError
from ..flats import (
    Flat,
    check_enumeration_budget,
    enumerate_flats_for_pattern,
    pair_flat_count,
    pivot_patterns,
)
from ..matroids import BinaryMatroid
from ..workers import run_sharded
from .models import DecompParams, DecompReport, DecompStats, Partition, Verdict

logger = logging.getLogger(__name__)


def minimum_uncolorable_rank(b: int) -> int:
    """Least d with (2^d - 1) / d > b, compared exactly as (2^d - 1) > b * d."""
    if b < 1:
        raise MatroidInputError(f"b must be at least 1, got {b}")
    d = 1
    while (1 << d) - 1 <= b * d:
        d += 1
    return d


def _binary_dimension_of(partition: Partition, n: Optional[int] = None) -> int:
    matroid = partition.matroid
    if not isinstance(matroid, BinaryMatroid):
        raise MatroidInputError(f"flat scans need a partition of a binary matroid, got {matroid.kind}")
    if n is not None and n != matroid.n:
        raise MatroidInputError(f"partition is of binary n={matroid.n}, not n={n}")
    return matroid.n


def _is_uncovered(flat: Flat, part_of: Dict[int, int]) -> bool:
    seen = set()
    for e in flat.elements:
        part = part_of[e]
        if part in seen:
            return False
        seen.add(part)
    return True


# ---------------------------------------------------------------------------
# Flat witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessScan:
    """
    Result of a flat-witness scan.

    Attributes:
        flat: First uncovered flat found, or None
        ranks: Ranks that were scanned, ascending
        flats_scanned: Flats examined up to and including the witness
    """
    flat: Optional[Flat]
    ranks: Tuple[int, ...]
    flats_scanned: int

    @property
    def found(self) -> bool:
        return self.flat is not None

    def to_report(self, params: DecompParams) -> Optional[DecompReport]:
        """The refutation carried by the witness, or None when nothing was found."""
        if self.flat is None:
            return None
        return DecompReport(
            Verdict.WITNESS_FLAT,
            params,
            stats=DecompStats(flats_scanned=self.flats_scanned),
            flat=self.flat,
        )

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "found": self.found,
            "ranks": list(self.ranks),
            "flats_scanned": self.flats_scanned,
        }
        if self.flat is not None:
            data["flat"] = self.flat.to_dict()
            data["flat_elements"] = sorted(self.flat.elements)
        return data


def _first_uncovered(n: int, pattern: Tuple[int, ...], part_of: Dict[int, int]) -> Tuple[Optional[Flat], int]:
    scanned = 0
    for flat in enumerate_flats_for_pattern(n, pattern):
        scanned += 1
        if _is_uncovered(flat, part_of):
            return flat, scanned
    return None, scanned


def scan_flat_witness(
    partition: Partition,
    b: int,
    d_max: Optional[int] = None,
    budget: Optional[int] = None,
    workers: int = 1,
) -> WitnessScan:
    """
    Look for an uncovered flat of rank d, smallest d first.

    Ranks run from minimum_uncolorable_rank(b) to ``d_max`` (default n); every
    rank in that range has flats that are not b-colorable. Within a rank, flats
    are scanned in canonical order, one shard per pivot pattern.

    Raises:
        MatroidInputError: The partition is not of a binary matroid, or d_max > n
        RefusalError: A rank has more flats than the enumeration budget
    """
    n = _binary_dimension_of(partition)
    d_max = n if d_max is None else d_max
    if d_max > n:
        raise MatroidInputError(f"d_max={d_max} exceeds n={n}")
    part_of = partition.part_of

    ranks: List[int] = []
    scanned = 0
    for d in range(minimum_uncolorable_rank(b), d_max + 1):
        check_enumeration_budget(n, d, budget)
        ranks.append(d)
        patterns = pivot_patterns(n, d)
        results = run_sharded(
            lambda p: _first_uncovered(n, p, part_of),
            patterns,
            workers,
            stop_when=lambda result: result[0] is not None,
        )
        for flat, count in results:
            scanned += count
            if flat is not None:
                logger.debug("uncovered rank-%d flat after %d flats", d, scanned)
                return WitnessScan(flat, tuple(ranks), scanned)
    logger.debug("no uncovered flat in ranks %s (%d flats)", ranks, scanned)
    return WitnessScan(None, tuple(ranks), scanned)


def find_flat_witness(
    partition: Partition,
    b: int,
    d_max: Optional[int] = None,
    budget: Optional[int] = None,
    workers: int = 1,
) -> Optional[Flat]:
    """
    A flat whose elements lie in pairwise distinct parts and that is not
    b-colorable, or None if every such flat of rank <= d_max is covered.
    """
    return scan_flat_witness(partition, b, d_max, budget, workers).flat


# ---------------------------------------------------------------------------
# Covering report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoveringReport:
    """
    Covered and uncovered rank-d flats of one partition.

    ``covered_by_part[i]`` counts the flats part i covers; a flat covered by
    several parts is counted once in ``covered`` and once per part here.
    """
    n: int
    d: int
    covered: int
    uncovered: Tuple[Flat, ...]
    covered_by_part: Tuple[int, ...] = field(default=())

    @property
    def total(self) -> int:
        return self.covered + len(self.uncovered)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "d": self.d,
            "covered": self.covered,
            "uncovered": len(self.uncovered),
            "total": self.total,
            "covered_by_part": list(self.covered_by_part),
            "uncovered_flats": [sorted(f.elements) for f in self.uncovered],
        }


def _cover_pattern(
    n: int,
    pattern: Tuple[int, ...],
    part_of: Dict[int, int],
    parts: int,
) -> Tuple[int, List[Flat], List[int]]:
    covered = 0
    uncovered: List[Flat] = []
    by_part = [0] * parts
    for flat in enumerate_flats_for_pattern(n, pattern):
        hits: Dict[int, int] = {}
        for e in flat.elements:
            index = part_of[e]
            hits[index] = hits.get(index, 0) + 1
        covering = [i for i, count in hits.items() if count >= 2]
        if covering:
            covered += 1
            for i in covering:
                by_part[i] += 1
        else:
            uncovered.append(flat)
    return covered, uncovered, by_part


def covering_report(
    n: int,
    d: int,
    partition: Partition,
    budget: Optional[int] = None,
    workers: int = 1,
) -> CoveringReport:
    """
    Classify every rank-d flat of binary_matroid(n) as covered or uncovered.

    Raises:
        RefusalError: More rank-d flats than the enumeration budget
    """
    _binary_dimension_of(partition, n)
    check_enumeration_budget(n, d, budget)
    part_of = partition.part_of
    size = partition.size

    results = run_sharded(lambda p: _cover_pattern(n, p, part_of, size), pivot_patterns(n, d), workers)
    covered = 0
    uncovered: List[Flat] = []
    by_part = [0] * size
    for count, missing, per_part in results:
        covered += count
        uncovered.extend(missing)
        by_part = [a + b for a, b in zip(by_part, per_part)]
    logger.debug("n=%d d=%d: %d covered, %d uncovered", n, d, covered, len(uncovered))
    return CoveringReport(n, d, covered, tuple(uncovered), tuple(by_part))


# ---------------------------------------------------------------------------
# Capacity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoveringCapacity:
    """
    Upper bounds on the number of rank-d flats a partition can cover.

    Attributes:
        aggregate: l * C(ck, 2) * C(2^n, d-2) with the partition's own l
        literal: The same expression with l replaced by n
        relaxed: 4c^2 * 2^(nd) / n, exact
    """
    n: int
    d: int
    parts: int
    c: int
    k: int
    aggregate: int
    literal: int
    relaxed: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "d": self.d,
            "parts": self.parts,
            "c": self.c,
            "k": self.k,
            "aggregate": self.aggregate,
            "literal": self.literal,
            "relaxed": str(self.relaxed),
        }


def capacity_bounds(n: int, d: int, parts: int, c: int, k: int) -> CoveringCapacity:
    """Capacity arithmetic for given l (``parts``), c and k."""
    if d < 2 or d > n:
        raise MatroidInputError(f"need 2 <= d <= n, got n={n}, d={d}")
    if parts < 1 or c < 1 or k < 1:
        raise MatroidInputError(f"parts, c and k must be positive, got {parts}, {c}, {k}")
    per_part = comb(c * k, 2) * comb(1 << n, d - 2)
    return CoveringCapacity(
        n=n,
        d=d,
        parts=parts,
        c=c,
        k=k,
        aggregate=parts * per_part,
        literal=n * per_part,
        relaxed=Fraction(4 * c * c * (1 << (n * d)), n),
    )


def covering_capacity(n: int, d: int, partition: Partition, c: int) -> CoveringCapacity:
    """Capacity bounds for ``partition``, with k its computed coloring number."""
    _binary_dimension_of(partition, n)
    return capacity_bounds(n, d, partition.size, c, partition.coloring_number)


def pair_covering_capacity(n: int, d: int, partition: Partition) -> int:
    """
    Sum over parts of C(|X_i|, 2) times the rank-d flats through a pair.

    Every covered flat contains a pair inside some part, so this bounds the
    covered count more tightly than the aggregate capacity.
    """
    _binary_dimension_of(partition, n)
    through_pair = pair_flat_count(n, d)
    return sum(comb(len(part), 2) for part in partition.parts) * through_pair
