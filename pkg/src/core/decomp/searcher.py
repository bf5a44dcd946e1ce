"""
Exhaustive search for (b,c)-decompositions of small matroids.

Elements are placed in id order, each into an existing part (in part order) or
into a new part, so every partition is visited once up to relabeling. A
placement is pruned as soon as the new element completes a selection (at most
one element per part) that is not b-colorable; later parts can only extend
such a selection, never repair it.
"""

import logging
import time
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence

from utils.constants import Budgets, Limits
from ..coloring import coloring_number
from ..errors import RefusalError
from ..flats import Flat, enumerate_flats
from ..matroids import BinaryMatroid, MatroidOracle
from .covering import minimum_uncolorable_rank
from .models import DecompParams, Partition, SearchOutcome, SearchResult
from .verifier import colorable_selection, verify_decomposition

logger = logging.getLogger(__name__)


class _Exhausted(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class DecompositionSearch:
    """
    Branch and bound over canonical partitions of one matroid.

    Args:
        matroid: Matroid with at most 16 elements
        b: Colors allowed per transversal
        c: Size multiplier
        node_budget: Maximum number of placements tried
        time_limit: Wall-clock limit in seconds (None for no limit)
    """

    def __init__(
        self,
        matroid: MatroidOracle,
        b: int,
        c: int,
        node_budget: Optional[int] = None,
        time_limit: Optional[float] = None,
    ):
        if len(matroid) > Limits.SEARCH_MAX_GROUND:
            raise RefusalError(
                f"search over {len(matroid)} elements refused (cap {Limits.SEARCH_MAX_GROUND})",
                limit=Limits.SEARCH_MAX_GROUND,
                required=len(matroid),
            )
        self.matroid = matroid
        self.params = DecompParams(b, c, coloring_number(matroid))
        self.node_budget = Budgets.SEARCH_NODES if node_budget is None else node_budget
        self.time_limit = time_limit
        self.nodes = 0

        self._elements = matroid.ground
        self._parts: List[List[int]] = []
        self._verdicts: Dict[FrozenSet[int], bool] = {}
        self._flats_by_element = self._index_flats()
        self._deadline: Optional[float] = None

    def _index_flats(self) -> Dict[int, List[Flat]]:
        """Rank-d flats that are not b-colorable, per element (binary matroids only)."""
        index: Dict[int, List[Flat]] = {}
        if not isinstance(self.matroid, BinaryMatroid):
            return index
        d = minimum_uncolorable_rank(self.params.b)
        if d > self.matroid.n:
            return index
        for flat in enumerate_flats(self.matroid.n, d):
            for e in flat.elements:
                index.setdefault(e, []).append(flat)
        return index

    def _colorable(self, chosen: Sequence[int]) -> bool:
        key = frozenset(chosen)
        verdict = self._verdicts.get(key)
        if verdict is None:
            verdict = colorable_selection(self.matroid, chosen, self.params.b)
            self._verdicts[key] = verdict
        return verdict

    def _flat_refutes(self, element: int, part_of: Dict[int, int]) -> bool:
        for flat in self._flats_by_element.get(element, ()):
            owners = [part_of.get(e) for e in flat.elements]
            if None not in owners and len(set(owners)) == len(owners):
                return True
        return False

    def _placement_ok(self, element: int, target: int, part_of: Dict[int, int]) -> bool:
        if self._flat_refutes(element, part_of):
            return False
        others = [part for i, part in enumerate(self._parts) if i != target]
        for choice in product(*others):
            if not self._colorable((element,) + choice):
                return False
        return True

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise _Exhausted(f"node budget {self.node_budget} reached")
        if self._deadline is not None and time.monotonic() > self._deadline:
            raise _Exhausted(f"time limit {self.time_limit}s reached")

    def _extend(self, position: int, part_of: Dict[int, int]) -> Optional[Partition]:
        if position == len(self._elements):
            candidate = Partition.from_parts(self.matroid, self._parts)
            if verify_decomposition(candidate, self.params.b, self.params.c).is_valid:
                return candidate
            logger.error("search leaf failed re-verification: %s", candidate.sorted_parts)
            return None

        element = self._elements[position]
        cap = self.params.max_part_size
        targets = [i for i, part in enumerate(self._parts) if len(part) < cap]
        targets.append(len(self._parts))

        for target in targets:
            self._tick()
            fresh = target == len(self._parts)
            if fresh:
                self._parts.append([])
            part_of[element] = target
            if self._placement_ok(element, target, part_of):
                self._parts[target].append(element)
                found = self._extend(position + 1, part_of)
                self._parts[target].pop()
                if found is not None:
                    return found
            del part_of[element]
            if fresh:
                self._parts.pop()
        return None

    def run(self) -> SearchResult:
        started = time.monotonic()
        self._deadline = None if self.time_limit is None else started + self.time_limit
        self.nodes = 0
        logger.info(
            "searching (%d,%d)-decompositions of a %d-element %s matroid (k=%d)",
            self.params.b, self.params.c, len(self.matroid), self.matroid.kind, self.params.k,
        )
        try:
            partition = self._extend(0, {})
        except _Exhausted as e:
            elapsed = time.monotonic() - started
            logger.warning("search exhausted after %d nodes: %s", self.nodes, e.reason)
            return SearchResult(SearchOutcome.EXHAUSTED, self.params, self.nodes, elapsed=elapsed, reason=e.reason)
        finally:
            self._parts = []

        elapsed = time.monotonic() - started
        if partition is None:
            logger.info("no decomposition exists (%d nodes)", self.nodes)
            return SearchResult(SearchOutcome.NONEXISTENT, self.params, self.nodes, elapsed=elapsed)
        logger.info("decomposition found after %d nodes", self.nodes)
        return SearchResult(SearchOutcome.FOUND, self.params, self.nodes, partition=partition, elapsed=elapsed)


def search_decomposition(
    matroid: MatroidOracle,
    b: int,
    c: int,
    budget: Optional[int] = None,
    time_limit: Optional[float] = None,
) -> SearchResult:
    """
    Find a (b,c)-decomposition, prove none exists, or report exhaustion.

    Args:
        matroid: Matroid with at most 16 elements
        b: Colors allowed per transversal
        c: Size multiplier
        budget: Node budget (placements tried)
        time_limit: Seconds before giving up with EXHAUSTED

    Returns:
        SearchResult: FOUND with a re-verified partition, NONEXISTENT, or EXHAUSTED

    Raises:
        RefusalError: More than 16 elements
    """
    return DecompositionSearch(matroid, b, c, budget, time_limit).run()
