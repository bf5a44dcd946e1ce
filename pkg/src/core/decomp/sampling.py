"""
Seeded spot-checks of the decomposition machinery on random partitions.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np

from ..coloring import coloring_number
from ..errors import RefusalError
from ..matroids import BinaryMatroid, MatroidOracle
from .covering import (
    covering_capacity,
    covering_report,
    find_flat_witness,
    minimum_uncolorable_rank,
    pair_covering_capacity,
)
from .models import Partition
from .verifier import verify_decomposition

logger = logging.getLogger(__name__)


def random_partition(matroid: MatroidOracle, rng: np.random.Generator, max_part_size: Optional[int] = None) -> Partition:
    """
    A random partition with parts of at most ``max_part_size`` elements.

    The ground set is shuffled and cut into consecutive runs whose lengths are
    drawn uniformly from 1..max_part_size.
    """
    ground = matroid.ground
    cap = len(ground) if max_part_size is None else max(1, max_part_size)
    order = [ground[i] for i in rng.permutation(len(ground))]
    parts: List[List[int]] = []
    start = 0
    while start < len(order):
        length = int(rng.integers(1, cap + 1))
        parts.append(order[start:start + length])
        start += length
    return Partition.from_parts(matroid, parts)


@dataclass
class SpotcheckSummary:
    """
    Violation counts over random partitions of binary_matroid(n).

    Every violation counter should stay at zero.

    Attributes:
        witness_unsound: A flat witness was found but the verifier said VALID
        capacity_exceeded: More covered flats than the aggregate or pair capacity
        uncovered_when_valid: A valid partition left a non-b-colorable flat uncovered
        refused: Samples skipped because a cap or budget was hit
    """
    n: int
    b: int
    c: int
    seed: int
    samples: int = 0
    valid: int = 0
    witnesses: int = 0
    witness_unsound: int = 0
    capacity_exceeded: int = 0
    uncovered_when_valid: int = 0
    refused: int = 0

    @property
    def violations(self) -> int:
        return self.witness_unsound + self.capacity_exceeded + self.uncovered_when_valid

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "b": self.b,
            "c": self.c,
            "seed": self.seed,
            "samples": self.samples,
            "valid": self.valid,
            "witnesses": self.witnesses,
            "witness_unsound": self.witness_unsound,
            "capacity_exceeded": self.capacity_exceeded,
            "uncovered_when_valid": self.uncovered_when_valid,
            "refused": self.refused,
            "violations": self.violations,
        }


def _check_sample(partition: Partition, summary: SpotcheckSummary, budget: Optional[int], workers: int) -> None:
    n, b, c = summary.n, summary.b, summary.c
    report = verify_decomposition(partition, b, c, budget=budget, workers=workers)
    witness = find_flat_witness(partition, b, budget=budget, workers=workers)
    if report.is_valid:
        summary.valid += 1
    if witness is not None:
        summary.witnesses += 1
        if report.is_valid:
            summary.witness_unsound += 1
            logger.error("witness %s against a valid partition %s", sorted(witness.elements), partition.sorted_parts)

    first_bad_rank = minimum_uncolorable_rank(b)
    for d in range(2, n + 1):
        cover = covering_report(n, d, partition, budget=budget, workers=workers)
        capacity = covering_capacity(n, d, partition, c)
        pairs = pair_covering_capacity(n, d, partition)
        if cover.covered > min(capacity.aggregate, pairs):
            summary.capacity_exceeded += 1
            logger.error("n=%d d=%d: %d covered > capacity %d (pairs %d)", n, d, cover.covered, capacity.aggregate, pairs)
        if report.is_valid and d >= first_bad_rank and cover.uncovered:
            summary.uncovered_when_valid += 1
            logger.error("valid partition leaves %d rank-%d flats uncovered", len(cover.uncovered), d)


def run_spotcheck(
    n: int,
    b: int,
    c: int,
    samples: int,
    seed: int,
    budget: Optional[int] = None,
    workers: int = 1,
) -> SpotcheckSummary:
    """
    Check witness soundness, covering capacity and the covered-flats condition
    on ``samples`` random partitions with parts of at most c * k elements.

    The same seed always draws the same partitions.
    """
    matroid = BinaryMatroid(n)
    rng = np.random.default_rng(seed)
    summary = SpotcheckSummary(n=n, b=b, c=c, seed=seed)
    cap = c * coloring_number(matroid)
    for _ in range(samples):
        partition = random_partition(matroid, rng, cap)
        summary.samples += 1
        try:
            _check_sample(partition, summary, budget, workers)
        except RefusalError as e:
            summary.refused += 1
            logger.warning("sample skipped: %s", e)
    logger.info("spotcheck n=%d b=%d c=%d: %d samples, %d violations", n, b, c, summary.samples, summary.violations)
    return summary
