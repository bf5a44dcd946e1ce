"""
Complete verifier for (b,c)-decompositions.

Checks the size clause, then walks the transversals (one element per part) depth
first in lexicographic order. b-colorability is hereditary, so a prefix that is
not b-colorable refutes every transversal extending it; the first such
extension is the lexicographically first witness. Checking full transversals is
enough for any selection Y with |Y ∩ X_i| <= 1, which extends to a full one.
"""

import logging
from math import prod
from typing import List, Optional, Sequence, Tuple

from utils.constants import Budgets, Limits
from ..coloring import InfeasibleColoring, color, coloring_number, is_b_colorable
from ..errors import RefusalError
from ..matroids import MatroidOracle, closure, restrict
from ..workers import run_sharded
from .models import DecompParams, DecompReport, DecompStats, Partition, Verdict

logger = logging.getLogger(__name__)


def colorable_selection(matroid: MatroidOracle, chosen: Sequence[int], b: int) -> bool:
    """b-colorability of a small selection, by independence first and augmentation second."""
    size = len(chosen)
    if matroid.raw_rank(chosen) == size:
        return True
    if b == 1:
        return False
    if any(matroid.raw_rank((e,)) == 0 for e in chosen):
        return False
    if size <= b:
        return True
    return not isinstance(color(restrict(matroid, chosen), b), InfeasibleColoring)


def _scan_subtree(
    matroid: MatroidOracle,
    parts: Tuple[Tuple[int, ...], ...],
    b: int,
    first: int,
) -> Tuple[Optional[Tuple[int, ...]], int]:
    """
    Transversals starting with ``first``.

    Returns:
        (witness or None, transversals checked up to and including the witness)
    """
    chosen: List[int] = [first]
    checked = 0

    def refuted(depth: int) -> Tuple[int, ...]:
        return tuple(chosen) + tuple(p[0] for p in parts[depth + 1:])

    if not colorable_selection(matroid, chosen, b):
        return refuted(0), 1

    def walk(depth: int) -> Optional[Tuple[int, ...]]:
        nonlocal checked
        if depth == len(parts):
            checked += 1
            return None
        for element in parts[depth]:
            chosen.append(element)
            if not colorable_selection(matroid, chosen, b):
                checked += 1
                witness = refuted(depth)
                chosen.pop()
                return witness
            witness = walk(depth + 1)
            chosen.pop()
            if witness is not None:
                return witness
        return None

    return walk(1), checked


def verify_decomposition(
    partition: Partition,
    b: int,
    c: int,
    budget: Optional[int] = None,
    workers: int = 1,
) -> DecompReport:
    """
    Decide whether ``partition`` is a (b,c)-decomposition.

    Args:
        partition: Candidate partition
        b: Colors allowed per transversal
        c: Size multiplier; parts may hold at most c * k elements
        budget: Maximum number of full transversals (product of part sizes)
        workers: Worker threads; shards are the choices in the first part

    Returns:
        VALID, SIZE_VIOLATION (first oversized part) or WITNESS_TRANSVERSAL
        (lexicographically first non-b-colorable transversal)

    Raises:
        RefusalError: Too many parts or transversals
    """
    params = DecompParams.for_partition(partition, b, c)
    budget = Budgets.TRANSVERSALS if budget is None else budget

    for index, part in enumerate(partition.parts):
        if len(part) > params.max_part_size:
            logger.debug("part %d has %d elements > c*k = %d", index, len(part), params.max_part_size)
            return DecompReport(Verdict.SIZE_VIOLATION, params, part_index=index)

    if partition.size > Limits.VERIFY_MAX_PARTS:
        raise RefusalError(
            f"{partition.size} parts exceed the verifier cap {Limits.VERIFY_MAX_PARTS}",
            limit=Limits.VERIFY_MAX_PARTS,
            required=partition.size,
        )
    total = prod(len(p) for p in partition.parts)
    if total > budget:
        logger.warning("Refusing to check %d transversals (budget %d)", total, budget)
        raise RefusalError(
            f"{total} transversals exceed the budget {budget}",
            limit=budget,
            required=total,
        )

    parts = partition.sorted_parts
    shards = list(parts[0])
    results = run_sharded(
        lambda first: _scan_subtree(partition.matroid, parts, b, first),
        shards,
        workers,
        stop_when=lambda result: result[0] is not None,
    )

    checked = 0
    for witness, count in results:
        checked += count
        if witness is not None:
            logger.debug("transversal %s is not %d-colorable", witness, b)
            return DecompReport(
                Verdict.WITNESS_TRANSVERSAL,
                params,
                stats=DecompStats(transversals_checked=checked),
                transversal=witness,
            )
    logger.debug("all %d transversals are %d-colorable", checked, b)
    return DecompReport(Verdict.VALID, params, stats=DecompStats(transversals_checked=checked))


def confirm_certificate(partition: Partition, report: DecompReport) -> bool:
    """
    Replay a refutation through the library.

    A size violation must name an oversized part; a transversal must take one
    element per part and fail b-colorability; a flat must be closed, meet every
    part at most once and fail b-colorability. VALID reports have nothing to replay.
    """
    params = report.params
    if report.verdict is Verdict.VALID:
        return True
    if report.verdict is Verdict.SIZE_VIOLATION:
        index = report.part_index
        return index is not None and len(partition.parts[index]) > params.c * params.k

    matroid = partition.matroid
    if report.verdict is Verdict.WITNESS_TRANSVERSAL:
        selection = report.transversal or ()
        if len(selection) != partition.size:
            return False
        owners = [partition.part_of.get(e) for e in selection]
        if None in owners or sorted(owners) != list(range(partition.size)):
            return False
        return not is_b_colorable(matroid, selection, params.b)

    flat = report.flat
    if flat is None:
        return False
    elements = flat.elements
    if not elements <= matroid.ground_set:
        return False
    if closure(matroid, elements) != elements:
        return False
    if len({partition.part_of[e] for e in elements}) != len(elements):
        return False
    return coloring_number(restrict(matroid, elements)) > params.b
