"""
Exact matroid coloring.

Two independent routes to the coloring number:

* the density characterization: the least k with k * r(R) >= |R| for every
  subset R, i.e. max over nonempty R of ceil(|R| / r(R));
* constructive matroid-union augmentation: elements are inserted in id order,
  each along a shortest exchange path (breadth first, smallest id first) in the
  exchange graph of the k color classes.

When the augmentation gets stuck, the set of elements it reached is returned as
a certificate T with |T| > k * r(T).
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from utils.constants import Budgets, Limits
from .errors import ColoringError, MatroidInputError, RefusalError
from .flats import count_flats_exact, enumerate_flats
from .gf2core import pivot_of, rank_of_bits
from .matroids import MatroidOracle, RestrictedMatroid, has_loops, restrict
from .workers import run_sharded, split_range

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coloring:
    """
    A partition of the ground set into k independent color classes.

    Attributes:
        matroid: The colored matroid
        classes: k disjoint independent classes covering the ground set
    """
    matroid: MatroidOracle
    classes: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        self.validate()

    @property
    def k(self) -> int:
        return len(self.classes)

    def validate(self) -> None:
        """
        Raises:
            ColoringError: A class is dependent, classes overlap, or the ground set is not covered
        """
        seen: set = set()
        for index, cls in enumerate(self.classes):
            if self.matroid.raw_rank(cls) != len(cls):
                raise ColoringError(f"color class {index} is not independent")
            if seen & cls:
                raise ColoringError(f"color class {index} overlaps an earlier class")
            seen |= cls
        if seen != self.matroid.ground_set:
            raise ColoringError("color classes do not cover the ground set")

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "classes": [sorted(c) for c in self.classes]}


@dataclass(frozen=True)
class InfeasibleColoring:
    """
    No k-coloring exists.

    Attributes:
        k: Number of colors tried
        stuck_element: Element that no exchange path could insert
        dense_set: Replayable certificate T with |T| > k * rank(T)
    """
    k: int
    stuck_element: int
    dense_set: FrozenSet[int]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "feasible": False,
            "stuck_element": self.stuck_element,
            "dense_set": sorted(self.dense_set),
        }


ColorResult = Union[Coloring, InfeasibleColoring]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _reject_loops(matroid: MatroidOracle) -> None:
    if has_loops(matroid):
        raise ColoringError(f"the {matroid.kind} matroid has a loop; no finite coloring exists")


def predicted_coloring_number(n: int) -> int:
    """ceil((2^n - 1) / n), which equals ceil(2^n / n) for n >= 2."""
    return _ceil_div((1 << n) - 1, n)


# ---------------------------------------------------------------------------
# Density characterization
# ---------------------------------------------------------------------------

def _density_range(matroid: MatroidOracle, elements: Sequence[int], indices: range) -> int:
    """Max of ceil(|R| / r(R)) over the Gray-code subsets with these indices."""
    if not indices:
        return 0
    tracker = matroid.rank_tracker()
    gray = indices.start ^ (indices.start >> 1)
    for i, e in enumerate(elements):
        if (gray >> i) & 1:
            tracker.add(e)

    best = 0
    size = len(tracker)
    if size:
        best = _ceil_div(size, tracker.rank)
    for i in range(indices.start + 1, indices.stop):
        bit = pivot_of(i)
        e = elements[bit]
        if (i ^ (i >> 1)) >> bit & 1:
            tracker.add(e)
            size += 1
        else:
            tracker.remove(e)
            size -= 1
        # ceil(size / rank) <= size
        if size > best:
            value = _ceil_div(size, tracker.rank)
            if value > best:
                best = value
    return best


def _density_by_subsets(matroid: MatroidOracle, workers: int) -> int:
    elements = matroid.ground
    if len(elements) > Limits.EXHAUSTIVE_SUBSETS:
        raise RefusalError(
            f"density oracle over {len(elements)} elements refused "
            f"(exhaustive cap {Limits.EXHAUSTIVE_SUBSETS})",
            limit=Limits.EXHAUSTIVE_SUBSETS,
            required=len(elements),
        )
    shards = split_range(1, 1 << len(elements), max(1, workers) * 4)
    results = run_sharded(lambda r: _density_range(matroid, elements, r), shards, workers)
    return max(results, default=0)


def _flat_total(n: int) -> int:
    return sum(count_flats_exact(n, d) for d in range(1, n + 1))


def _density_by_flats(matroid: MatroidOracle, n: int) -> int:
    """
    Max over ambient flats F of ceil(|F ∩ S| / r(F ∩ S)).

    Every subset R of S has the same rank as cl(R) ∩ S ⊇ R, so the maximum is
    attained on sets of that form.
    """
    ground = matroid.ground_set
    whole = not isinstance(matroid, RestrictedMatroid)
    best = 0
    for d in range(1, n + 1):
        for flat in enumerate_flats(n, d):
            members = flat.elements if whole else flat.elements & ground
            if len(members) <= best:
                continue
            value = _ceil_div(len(members), rank_of_bits(members))
            best = max(best, value)
    return best


@lru_cache(maxsize=256)
def coloring_number_density(matroid: MatroidOracle, method: str = "auto", workers: int = 1) -> int:
    """
    Coloring number via max over nonempty R of ceil(|R| / r(R)).

    Args:
        matroid: Loopless matroid
        method: "subsets" (exhaustive Gray-code walk, |ground| <= 20),
                "flats" (binary matroids and their restrictions only), or
                "auto" (flats when the flat census is within budget, else subsets)
        workers: Worker threads for the subset walk

    Raises:
        RefusalError: Ground set too large for the chosen method
        ColoringError: The matroid has a loop
    """
    if len(matroid) == 0:
        return 0
    _reject_loops(matroid)
    n = matroid.binary_dimension()

    if method == "auto":
        if n is not None and _flat_total(n) <= Budgets.FLATS and (
            len(matroid) > 12 or not isinstance(matroid, RestrictedMatroid)
        ):
            method = "flats"
        else:
            method = "subsets"

    if method == "flats":
        if n is None:
            raise MatroidInputError("the flat fast path needs a binary matroid or a restriction of one")
        value = _density_by_flats(matroid, n)
    elif method == "subsets":
        value = _density_by_subsets(matroid, workers)
    else:
        raise MatroidInputError(f"unknown density method {method!r}")

    logger.debug("density coloring number of %s via %s: %d", matroid.kind, method, value)
    return value


# ---------------------------------------------------------------------------
# Matroid-union augmentation
# ---------------------------------------------------------------------------

def _shortest_exchange_path(
    matroid: MatroidOracle,
    classes: List[set],
    color_of: Dict[int, int],
    start: int,
) -> Tuple[Optional[List[Tuple[int, int]]], FrozenSet[int]]:
    """
    Breadth-first search for a shortest path that inserts ``start``.

    Returns:
        (moves, reached): moves is a list of (element, new class) or None when
        no path exists; reached is the set of visited elements.
    """
    parent: Dict[int, Optional[Tuple[int, int]]] = {start: None}
    queue = deque([start])
    k = len(classes)

    while queue:
        x = queue.popleft()
        for j in range(k):
            if color_of.get(x) == j:
                continue
            members = classes[j]
            if matroid.raw_rank(members | {x}) == len(members) + 1:
                moves = [(x, j)]
                cur = x
                while parent[cur] is not None:
                    prev, via = parent[cur]
                    moves.append((prev, via))
                    cur = prev
                return moves, frozenset(parent)
            # x closes a circuit in class j; its other elements can be swapped out
            for y in sorted(members):
                if y in parent:
                    continue
                if matroid.raw_rank((members - {y}) | {x}) == len(members):
                    parent[y] = (x, j)
                    queue.append(y)
    return None, frozenset(parent)


def color(matroid: MatroidOracle, k: int) -> ColorResult:
    """
    Partition the ground set into k independent sets, or prove that none exists.

    Returns:
        A validated Coloring, or InfeasibleColoring carrying a dense-set certificate

    Raises:
        MatroidInputError: k < 1
        ColoringError: The matroid has a loop
    """
    if k < 1:
        raise MatroidInputError(f"k must be at least 1, got {k}")
    _reject_loops(matroid)

    classes: List[set] = [set() for _ in range(k)]
    color_of: Dict[int, int] = {}
    for element in matroid.ground:
        moves, reached = _shortest_exchange_path(matroid, classes, color_of, element)
        if moves is None:
            logger.debug("%d-coloring infeasible: element %d stuck, %d reached", k, element, len(reached))
            return InfeasibleColoring(k, element, reached)
        for moved, _ in moves:
            old = color_of.get(moved)
            if old is not None:
                classes[old].discard(moved)
        for moved, target in moves:
            classes[target].add(moved)
            color_of[moved] = target

    return Coloring(matroid, tuple(frozenset(c) for c in classes))


@lru_cache(maxsize=256)
def coloring_number(matroid: MatroidOracle) -> int:
    """
    Smallest k with a k-coloring, searched upward from ceil(|S| / r(S)).

    Raises:
        ColoringError: The matroid has a loop
    """
    size = len(matroid)
    if size == 0:
        return 0
    _reject_loops(matroid)
    k = _ceil_div(size, matroid.full_rank())
    while isinstance(color(matroid, k), InfeasibleColoring):
        k += 1
    logger.debug("coloring number of %s matroid: %d", matroid.kind, k)
    return k


def optimal_coloring(matroid: MatroidOracle) -> Optional[Coloring]:
    """A coloring with exactly coloring_number(matroid) classes (None for an empty ground set)."""
    k = coloring_number(matroid)
    if k == 0:
        return None
    result = color(matroid, k)
    assert isinstance(result, Coloring)
    return result


def is_b_colorable(matroid: MatroidOracle, subset: Iterable[int], b: int) -> bool:
    """
    True iff ``subset`` splits into b independent sets.

    Decided by the density characterization on the restriction, so ``subset``
    is capped at 20 elements. A loop makes the set uncolorable.

    Raises:
        RefusalError: More than 20 elements
    """
    items = matroid.check_subset(subset)
    if b < 1:
        raise MatroidInputError(f"b must be at least 1, got {b}")
    if not items:
        return True
    if len(items) > Limits.EXHAUSTIVE_SUBSETS:
        raise RefusalError(
            f"b-colorability of {len(items)} elements refused (cap {Limits.EXHAUSTIVE_SUBSETS})",
            limit=Limits.EXHAUSTIVE_SUBSETS,
            required=len(items),
        )
    if matroid.raw_rank(items) == len(items):
        return True
    sub = restrict(matroid, items)
    if has_loops(sub):
        return False
    return coloring_number_density(sub, "subsets") <= b
