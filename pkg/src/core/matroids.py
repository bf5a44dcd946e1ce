"""
Matroids presented by rank oracles.

The binary matroid (ground set = all nonzero n-bit vectors, independence = linear
independence over GF(2)) is the central instance; partition and uniform matroids
and restrictions serve as fixtures. Element ids are integers; for the binary
matroid an element id *is* its vector.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import (
    Any, Dict, FrozenSet, Iterable, Iterator, Optional, Sequence, Set, Tuple,
)

from utils.constants import Limits
from .errors import MatroidInputError, RefusalError
from .gf2core import in_span, rank_of_bits, reduce_bits, rref_of_bits, span_bits


class RankTracker:
    """
    Rank of a mutable subset, updated one element at a time.

    The default implementation recomputes through the oracle; oracle kinds with
    cheap incremental ranks override it.
    """

    def __init__(self, matroid: "MatroidOracle"):
        self._matroid = matroid
        self._members: Set[int] = set()

    def add(self, element: int) -> None:
        self._members.add(element)

    def remove(self, element: int) -> None:
        self._members.discard(element)

    def __len__(self) -> int:
        return len(self._members)

    @property
    def rank(self) -> int:
        return self._matroid.raw_rank(self._members)


class MatroidOracle(ABC):
    """
    A matroid given by its ground set and rank function.

    Subclasses implement ``raw_rank`` (no validation, used in hot loops) and
    ``to_spec`` (the JSON description). Values are immutable and hashable.
    """

    kind: str = "abstract"

    @property
    @abstractmethod
    def ground(self) -> Tuple[int, ...]:
        """Ground set, sorted, no duplicates."""

    @abstractmethod
    def raw_rank(self, subset: Iterable[int]) -> int:
        """Rank of ``subset`` without checking membership."""

    @abstractmethod
    def to_spec(self) -> Dict[str, Any]:
        """JSON-ready description of this matroid."""

    @cached_property
    def ground_set(self) -> FrozenSet[int]:
        return frozenset(self.ground)

    def rank(self, subset: Iterable[int]) -> int:
        """
        Rank of ``subset``.

        Raises:
            MatroidInputError: ``subset`` has elements outside the ground set
        """
        return self.raw_rank(self.check_subset(subset))

    def check_subset(self, subset: Iterable[int]) -> FrozenSet[int]:
        items = frozenset(subset)
        foreign = items - self.ground_set
        if foreign:
            raise MatroidInputError(
                f"elements not in the {self.kind} ground set: {sorted(foreign)[:8]}"
            )
        return items

    def full_rank(self) -> int:
        return self.raw_rank(self.ground)

    def rank_tracker(self) -> RankTracker:
        return RankTracker(self)

    def binary_dimension(self) -> Optional[int]:
        """n if this is a binary matroid or a restriction of one, else None."""
        return None

    def __len__(self) -> int:
        return len(self.ground)


@dataclass(frozen=True)
class BinaryMatroid(MatroidOracle):
    """All nonzero vectors of GF(2)^n."""
    n: int
    kind = "binary"

    def __post_init__(self):
        if not Limits.MIN_BINARY_DIMENSION <= self.n <= Limits.MAX_WIDTH:
            raise MatroidInputError(
                f"binary matroid dimension {self.n} outside "
                f"{Limits.MIN_BINARY_DIMENSION}..{Limits.MAX_WIDTH}"
            )

    @property
    def ground(self) -> Tuple[int, ...]:
        if self.n > Limits.SPAN_ENUMERATION_RANK:
            raise RefusalError(
                f"binary matroid of dimension {self.n} has 2^{self.n} - 1 elements; "
                "its ground set is not materialised",
                limit=Limits.SPAN_ENUMERATION_RANK,
                required=self.n,
            )
        return tuple(range(1, 1 << self.n))

    def check_subset(self, subset: Iterable[int]) -> FrozenSet[int]:
        items = frozenset(subset)
        top = 1 << self.n
        foreign = [e for e in items if not 0 < e < top]
        if foreign:
            raise MatroidInputError(
                f"elements not in the binary ground set of dimension {self.n}: "
                f"{sorted(foreign)[:8]}"
            )
        return items

    def raw_rank(self, subset: Iterable[int]) -> int:
        return rank_of_bits(subset)

    def full_rank(self) -> int:
        return self.n

    def binary_dimension(self) -> Optional[int]:
        return self.n

    def __len__(self) -> int:
        return (1 << self.n) - 1

    def to_spec(self) -> Dict[str, Any]:
        return {"kind": "binary", "n": self.n}


class _PartitionTracker(RankTracker):
    def __init__(self, matroid: "PartitionMatroid"):
        super().__init__(matroid)
        self._class_of = matroid.class_of
        self._counts: Dict[int, int] = {}
        self._rank = 0

    def add(self, element: int) -> None:
        if element in self._members:
            return
        self._members.add(element)
        c = self._class_of[element]
        self._counts[c] = self._counts.get(c, 0) + 1
        if self._counts[c] == 1:
            self._rank += 1

    def remove(self, element: int) -> None:
        if element not in self._members:
            return
        self._members.discard(element)
        c = self._class_of[element]
        self._counts[c] -= 1
        if self._counts[c] == 0:
            self._rank -= 1

    @property
    def rank(self) -> int:
        return self._rank


@dataclass(frozen=True)
class PartitionMatroid(MatroidOracle):
    """Pick at most one element per class (capacity 1)."""
    classes: Tuple[FrozenSet[int], ...]
    class_of: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)
    kind = "partition"

    def __post_init__(self):
        class_of: Dict[int, int] = {}
        for index, members in enumerate(self.classes):
            for element in members:
                if element in class_of:
                    raise MatroidInputError(
                        f"element {element} appears in classes {class_of[element]} and {index}"
                    )
                class_of[element] = index
        object.__setattr__(self, "class_of", class_of)

    @cached_property
    def ground(self) -> Tuple[int, ...]:
        return tuple(sorted(self.class_of))

    def raw_rank(self, subset: Iterable[int]) -> int:
        return len({self.class_of[e] for e in subset})

    def rank_tracker(self) -> RankTracker:
        return _PartitionTracker(self)

    def to_spec(self) -> Dict[str, Any]:
        return {"kind": "partition", "classes": [sorted(c) for c in self.classes]}


class _UniformTracker(RankTracker):
    @property
    def rank(self) -> int:
        return min(len(self._members), self._matroid.r)


@dataclass(frozen=True)
class UniformMatroid(MatroidOracle):
    """U(r, size) on elements 0..size-1."""
    size: int
    r: int
    kind = "uniform"

    def __post_init__(self):
        if self.size < 0 or not 0 <= self.r <= self.size:
            raise MatroidInputError(f"uniform matroid needs 0 <= rank <= size, got {self.r}, {self.size}")

    @property
    def ground(self) -> Tuple[int, ...]:
        return tuple(range(self.size))

    def raw_rank(self, subset: Iterable[int]) -> int:
        return min(len(set(subset)), self.r)

    def rank_tracker(self) -> RankTracker:
        return _UniformTracker(self)

    def to_spec(self) -> Dict[str, Any]:
        return {"kind": "uniform", "size": self.size, "rank": self.r}


@dataclass(frozen=True)
class RestrictedMatroid(MatroidOracle):
    """The restriction of ``parent`` to ``subset``."""
    parent: MatroidOracle
    subset: FrozenSet[int]
    kind = "restriction"

    @cached_property
    def ground(self) -> Tuple[int, ...]:
        return tuple(sorted(self.subset))

    @property
    def ground_set(self) -> FrozenSet[int]:
        return self.subset

    def raw_rank(self, subset: Iterable[int]) -> int:
        return self.parent.raw_rank(subset)

    def rank_tracker(self) -> RankTracker:
        return self.parent.rank_tracker()

    def binary_dimension(self) -> Optional[int]:
        return self.parent.binary_dimension()

    def to_spec(self) -> Dict[str, Any]:
        return {"kind": "restriction", "parent": self.parent.to_spec(), "subset": sorted(self.subset)}


@dataclass(frozen=True)
class FlatSet:
    """A flat: every element outside it raises the rank."""
    matroid: MatroidOracle
    elements: FrozenSet[int]

    def __post_init__(self):
        if not is_flat(self.matroid, self.elements):
            raise MatroidInputError(f"{sorted(self.elements)[:8]} is not a flat of the {self.matroid.kind} matroid")

    @classmethod
    def of(cls, matroid: MatroidOracle, elements: Iterable[int]) -> "FlatSet":
        return cls(matroid, frozenset(elements))

    @property
    def rank(self) -> int:
        return self.matroid.raw_rank(self.elements)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def binary_matroid(n: int) -> BinaryMatroid:
    """
    The binary matroid of dimension n.

    Raises:
        MatroidInputError: n outside 2..62
    """
    return BinaryMatroid(n)


def partition_matroid(classes: Iterable[Iterable[int]]) -> PartitionMatroid:
    """
    Capacity-1 partition matroid on the union of ``classes``.

    Raises:
        MatroidInputError: Overlapping classes
    """
    return PartitionMatroid(tuple(frozenset(c) for c in classes))


def uniform_matroid(size: int, rank: int) -> UniformMatroid:
    return UniformMatroid(size, rank)


def restrict(matroid: MatroidOracle, subset: Iterable[int]) -> MatroidOracle:
    """Restriction to ``subset``; restrictions of restrictions collapse onto the original parent."""
    items = matroid.check_subset(subset)
    if isinstance(matroid, RestrictedMatroid):
        return RestrictedMatroid(matroid.parent, items)
    return RestrictedMatroid(matroid, items)


# ---------------------------------------------------------------------------
# Queries
# ---------------------------------------------------------------------------

def is_independent(matroid: MatroidOracle, subset: Iterable[int]) -> bool:
    """True iff rank(subset) = |subset|."""
    items = matroid.check_subset(subset)
    return matroid.raw_rank(items) == len(items)


def closure(matroid: MatroidOracle, subset: Iterable[int]) -> FrozenSet[int]:
    """Largest superset of ``subset`` with the same rank."""
    items = matroid.check_subset(subset)
    if isinstance(matroid, BinaryMatroid):
        return frozenset(span_bits(rref_of_bits(items)))
    if matroid.binary_dimension() is not None:
        basis = reduce_bits(items)
        return frozenset(e for e in matroid.ground if in_span(basis, e))

    base = matroid.raw_rank(items)
    extra = [e for e in matroid.ground if e not in items and matroid.raw_rank(items | {e}) == base]
    return items | frozenset(extra)


def is_flat(matroid: MatroidOracle, subset: Iterable[int]) -> bool:
    items = matroid.check_subset(subset)
    return closure(matroid, items) == items


def has_loops(matroid: MatroidOracle) -> bool:
    return any(matroid.raw_rank((e,)) == 0 for e in matroid.ground)


def iter_subsets(elements: Sequence[int], cap: int = Limits.EXHAUSTIVE_SUBSETS) -> Iterator[FrozenSet[int]]:
    """
    Every subset of ``elements``, smallest first.

    Raises:
        RefusalError: More than ``cap`` elements
    """
    if len(elements) > cap:
        raise RefusalError(
            f"exhaustive iteration over {len(elements)} elements refused (cap {cap})",
            limit=cap,
            required=len(elements),
        )
    for size in range(len(elements) + 1):
        for combo in combinations(elements, size):
            yield frozenset(combo)