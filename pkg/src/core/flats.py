"""
Flats of the binary matroid: enumeration, exact counts and lower bounds.

A rank-d flat of the binary matroid of dimension n is a d-dimensional subspace
minus the zero vector. Flats are generated directly as canonical reduced echelon
bases (pivot columns first, then free entries), never by deduplicating spans, so
the output is exactly the Gaussian binomial count.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from utils.constants import Budgets, Limits
from .errors import MatroidInputError, RefusalError
from .gf2core import Gf2Rref, rref_of_bits, span_bits
from .matroids import FlatSet, MatroidOracle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Flat:
    """
    A rank-d flat, stored as its canonical basis.

    Two Flats are equal iff their bases are bit-identical.
    """
    n: int
    d: int
    basis: Gf2Rref

    @classmethod
    def from_vectors(cls, n: int, vectors: Iterable[int]) -> "Flat":
        """Closure of ``vectors`` as a canonical flat."""
        rows = rref_of_bits(vectors)
        return cls(n, len(rows), Gf2Rref(n, rows))

    @cached_property
    def elements(self) -> FrozenSet[int]:
        return frozenset(span_bits(self.basis.rows))

    def contains(self, element: int) -> bool:
        return element != 0 and self.basis.contains(element)

    def as_flat_set(self, matroid: MatroidOracle) -> FlatSet:
        return FlatSet(matroid, self.elements)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "d": self.d, "basis": [format(row, "x") for row in self.basis.rows]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Flat":
        try:
            n = int(data["n"])
            rows = [int(str(v), 16) for v in data["basis"]]
        except (KeyError, TypeError, ValueError) as e:
            raise MatroidInputError(f"malformed flat: {e}") from None
        flat = cls.from_vectors(n, rows)
        if flat.d != len(rows) or ("d" in data and int(data["d"]) != flat.d):
            raise MatroidInputError("flat basis rows are not independent")
        return flat


@dataclass(frozen=True)
class FlatCount:
    """Exact count of rank-d flats and the lower bound (None when d > n/2)."""
    n: int
    d: int
    exact: int
    lower_bound: Optional[int]


@dataclass(frozen=True)
class CensusRow:
    n: int
    d: int
    exact: int
    lower_bound: Optional[int]
    relaxed_bound: Optional[Fraction]
    enumerated: Optional[int]
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "d": self.d,
            "exact": self.exact,
            "lower_bound": self.lower_bound,
            "relaxed_bound": None if self.relaxed_bound is None else str(self.relaxed_bound),
            "enumerated": self.enumerated,
            "note": self.note,
        }


def _check_rank(n: int, d: int, low: int = 1) -> None:
    if n < 1 or not low <= d <= n:
        raise MatroidInputError(f"need {low} <= d <= n, got n={n}, d={d}")


# ---------------------------------------------------------------------------
# Counting
# ---------------------------------------------------------------------------

def gaussian_binomial(n: int, d: int) -> int:
    """Number of d-dimensional subspaces of GF(2)^n (1 for d = 0)."""
    if d < 0 or d > n:
        raise MatroidInputError(f"need 0 <= d <= n, got n={n}, d={d}")
    numerator = 1
    denominator = 1
    for i in range(d):
        numerator *= (1 << n) - (1 << i)
        denominator *= (1 << d) - (1 << i)
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0
    return quotient


def count_flats_exact(n: int, d: int) -> int:
    """
    Exact number of rank-d flats: prod_{i=1..d} (2^n - 2^(i-1)) / (2^d - 2^(i-1)).

    Pure integer arithmetic, no width cap.
    """
    _check_rank(n, d)
    return gaussian_binomial(n, d)


def flat_count_lower_bound(n: int, d: int) -> int:
    """
    The power-of-two lower bound 2^(dn - d^2 - d), claimed only for d <= n/2.

    Raises:
        RefusalError: d > n/2
    """
    _check_rank(n, d)
    if 2 * d > n:
        raise RefusalError(f"lower bound is only claimed for d <= n/2 (n={n}, d={d})")
    return 1 << (d * n - d * d - d)


def relaxed_flat_count_bound(n: int, d: int) -> Fraction:
    """Intermediate bound ((2^n - 2^d) / 2^d)^d of the counting argument."""
    _check_rank(n, d)
    return Fraction((1 << n) - (1 << d), 1 << d) ** d


def flat_count(n: int, d: int) -> FlatCount:
    lower = flat_count_lower_bound(n, d) if 2 * d <= n else None
    return FlatCount(n, d, count_flats_exact(n, d), lower)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def pivot_patterns(n: int, d: int) -> List[Tuple[int, ...]]:
    """Pivot column choices in lexicographic order; one shard each."""
    return list(combinations(range(n), d))


def _subsets_of(positions: Sequence[int]) -> List[int]:
    masks = [0]
    for pos in positions:
        masks += [m | (1 << pos) for m in masks]
    return sorted(masks)


def enumerate_flats_for_pattern(n: int, pivots: Sequence[int]) -> Iterator[Flat]:
    """Every flat whose canonical basis has exactly these pivot columns."""
    pivot_set = set(pivots)
    d = len(pivots)
    options = []
    for p in pivots:
        free = [j for j in range(p + 1, n) if j not in pivot_set]
        options.append([(1 << p) | mask for mask in _subsets_of(free)])
    for rows in product(*options):
        yield Flat(n, d, Gf2Rref(n, tuple(rows)))


def check_enumeration_budget(n: int, d: int, budget: Optional[int] = None) -> int:
    """
    Return the flat count, refusing when it exceeds ``budget``.

    Raises:
        RefusalError: More than ``budget`` rank-d flats, or n beyond the word width
    """
    if n > Limits.MAX_WIDTH:
        raise MatroidInputError(f"dimension {n} exceeds width cap {Limits.MAX_WIDTH}")
    budget = Budgets.FLATS if budget is None else budget
    total = count_flats_exact(n, d)
    if total > budget:
        logger.warning("Refusing to enumerate %d rank-%d flats of n=%d (budget %d)", total, d, n, budget)
        raise RefusalError(
            f"{total} rank-{d} flats in dimension {n} exceed the enumeration budget {budget}",
            limit=budget,
            required=total,
        )
    return total


def enumerate_flats(n: int, d: int, budget: Optional[int] = None) -> Iterator[Flat]:
    """
    Yield each rank-d flat exactly once, in canonical order.

    The order is lexicographic by pivot columns, then by row values.

    Raises:
        RefusalError: Count above the enumeration budget (raised before the first flat)
    """
    _check_rank(n, d)
    check_enumeration_budget(n, d, budget)
    return _walk(n, d)


def _walk(n: int, d: int) -> Iterator[Flat]:
    for pattern in pivot_patterns(n, d):
        yield from enumerate_flats_for_pattern(n, pattern)


def flats_through_pair(n: int, d: int, x: int, y: int) -> Iterator[Flat]:
    """
    Yield exactly the rank-d flats containing both ``x`` and ``y``.

    Every such flat is W + U with W = span{x, y} and U a (d-2)-dimensional
    subspace of the coordinates outside W's two pivot columns.
    """
    top = 1 << n
    if not (0 < x < top and 0 < y < top) or x == y:
        raise MatroidInputError(f"need two distinct nonzero vectors of width {n}, got {x:#x}, {y:#x}")
    if d < 2 or d > n:
        raise MatroidInputError(f"need 2 <= d <= n, got d={d}")
    pair = rref_of_bits((x, y))
    pivots = {(row & -row).bit_length() - 1 for row in pair}
    others = [j for j in range(n) if j not in pivots]
    k = d - 2
    if k == 0:
        yield Flat(n, 2, Gf2Rref(n, pair))
        return
    for local in combinations(range(len(others)), k):
        for sub in enumerate_flats_for_pattern(len(others), local):
            lifted = [_lift(row, others) for row in sub.basis.rows]
            yield Flat.from_vectors(n, list(pair) + lifted)


def _lift(row: int, positions: Sequence[int]) -> int:
    value = 0
    for i, pos in enumerate(positions):
        if (row >> i) & 1:
            value |= 1 << pos
    return value


def pair_flat_count(n: int, d: int) -> int:
    """Number of rank-d flats through any two distinct points: [n-2 choose d-2]_2."""
    if d < 2 or d > n:
        raise MatroidInputError(f"need 2 <= d <= n, got d={d}")
    return gaussian_binomial(n - 2, d - 2)


def pair_capacity_bound(n: int, d: int) -> int:
    """The per-pair bound C(2^n, d-2) used by the covering argument."""
    return comb(1 << n, d - 2)


# ---------------------------------------------------------------------------
# Census
# ---------------------------------------------------------------------------

def flat_census(
    n_values: Iterable[int],
    d_values: Iterable[int],
    budget: Optional[int] = None,
) -> List[CensusRow]:
    """
    One row per (n, d) with 1 <= d <= n: exact count, bounds, and the
    enumerated count when it fits in ``budget`` (which must then match).
    """
    d_list = sorted(set(d_values))
    rows: List[CensusRow] = []
    for n in sorted(set(n_values)):
        for d in d_list:
            if not 1 <= d <= n:
                continue
            exact = count_flats_exact(n, d)
            lower = flat_count_lower_bound(n, d) if 2 * d <= n else None
            relaxed = relaxed_flat_count_bound(n, d) if 2 * d <= n else None
            enumerated: Optional[int] = None
            note = ""
            try:
                enumerated = sum(1 for _ in enumerate_flats(n, d, budget))
            except (RefusalError, MatroidInputError) as e:
                note = f"not enumerated: {e}"
            if enumerated is not None and enumerated != exact:
                note = "MISMATCH"
                logger.error("census mismatch at n=%d d=%d: %d enumerated, %d exact", n, d, enumerated, exact)
            rows.append(CensusRow(n, d, exact, lower, relaxed, enumerated, note))
    return rows
