"""
Data model of (b,c)-decompositions: partitions, parameters and reports.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, Optional, Tuple

from ..coloring import coloring_number, predicted_coloring_number
from ..errors import MatroidInputError
from ..flats import Flat
from ..matroids import BinaryMatroid, MatroidOracle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    """
    A partition X_1..X_l of the ground set into nonempty disjoint parts.

    Parts keep the order they were given in; transversals and witnesses are
    reported in that order.
    """
    matroid: MatroidOracle
    parts: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        if not self.parts:
            raise MatroidInputError("a partition needs at least one part")
        seen: set = set()
        for index, part in enumerate(self.parts):
            if not part:
                raise MatroidInputError(f"part {index} is empty")
            overlap = seen & part
            if overlap:
                raise MatroidInputError(f"part {index} repeats elements {sorted(overlap)[:8]}")
            seen |= part
        self.matroid.check_subset(seen)
        if len(seen) != len(self.matroid):
            missing = sorted(self.matroid.ground_set - seen)
            raise MatroidInputError(f"parts do not cover the ground set; missing {missing[:8]}")

    @classmethod
    def from_parts(cls, matroid: MatroidOracle, parts: Iterable[Iterable[int]]) -> "Partition":
        return cls(matroid, tuple(frozenset(p) for p in parts))

    @property
    def size(self) -> int:
        """Number of parts (l)."""
        return len(self.parts)

    @cached_property
    def part_of(self) -> Dict[int, int]:
        return {e: i for i, part in enumerate(self.parts) for e in part}

    @cached_property
    def sorted_parts(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(sorted(p)) for p in self.parts)

    @cached_property
    def coloring_number(self) -> int:
        """k of the underlying matroid, computed (never taken from the caller)."""
        k = coloring_number(self.matroid)
        if isinstance(self.matroid, BinaryMatroid) and k != predicted_coloring_number(self.matroid.n):
            logger.error(
                "coloring number %d of binary n=%d disagrees with ceil(2^n/n) = %d",
                k, self.matroid.n, predicted_coloring_number(self.matroid.n),
            )
        return k

    def to_dict(self) -> Dict[str, Any]:
        return {"matroid": self.matroid.to_spec(), "parts": [list(p) for p in self.sorted_parts]}


@dataclass(frozen=True)
class DecompParams:
    """
    Parameters b (colors per transversal) and c (size multiplier), with the
    coloring number k of the matroid.
    """
    b: int
    c: int
    k: int

    def __post_init__(self):
        if self.b < 1 or self.c < 1:
            raise MatroidInputError(f"b and c must be at least 1, got b={self.b}, c={self.c}")

    @classmethod
    def for_partition(cls, partition: Partition, b: int, c: int) -> "DecompParams":
        return cls(b, c, partition.coloring_number)

    @property
    def max_part_size(self) -> int:
        return self.c * self.k


class Verdict(Enum):
    VALID = "valid"
    SIZE_VIOLATION = "size_violation"
    WITNESS_TRANSVERSAL = "witness_transversal"
    WITNESS_FLAT = "witness_flat"


@dataclass(frozen=True)
class DecompStats:
    transversals_checked: int = 0
    flats_scanned: int = 0

    def to_dict(self) -> Dict[str, int]:
        return {"transversals_checked": self.transversals_checked, "flats_scanned": self.flats_scanned}


@dataclass(frozen=True)
class DecompReport:
    """
    Verdict on a candidate decomposition, with its certificate.

    Exactly one certificate field is set for a refutation: ``part_index`` for a
    size violation, ``transversal`` for a non-b-colorable transversal, ``flat``
    for a flat whose elements sit in pairwise distinct parts.
    """
    verdict: Verdict
    params: DecompParams
    stats: DecompStats = field(default_factory=DecompStats)
    part_index: Optional[int] = None
    transversal: Optional[Tuple[int, ...]] = None
    flat: Optional[Flat] = None

    @property
    def is_valid(self) -> bool:
        return self.verdict is Verdict.VALID

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "verdict": self.verdict.value,
            "b": self.params.b,
            "c": self.params.c,
            "k": self.params.k,
        }
        if self.part_index is not None:
            data["part_index"] = self.part_index
        if self.transversal is not None:
            data["transversal"] = list(self.transversal)
        if self.flat is not None:
            data["flat"] = self.flat.to_dict()
            data["flat_elements"] = sorted(self.flat.elements)
        data["stats"] = self.stats.to_dict()
        return data


class SearchOutcome(Enum):
    FOUND = "found"
    NONEXISTENT = "nonexistent"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class SearchResult:
    """
    Outcome of an exhaustive decomposition search.

    ``EXHAUSTED`` means the budget ran out; it is not a nonexistence claim.
    """
    outcome: SearchOutcome
    params: DecompParams
    nodes: int
    partition: Optional[Partition] = None
    elapsed: float = 0.0
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "outcome": self.outcome.value,
            "b": self.params.b,
            "c": self.params.c,
            "k": self.params.k,
            "nodes": self.nodes,
        }
        if self.partition is not None:
            data["parts"] = [list(p) for p in self.partition.sorted_parts]
        if self.reason:
            data["reason"] = self.reason
        return data
