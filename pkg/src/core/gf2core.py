"""
Bit-packed linear algebra over GF(2).

A vector of width n is an integer below 2^n; bit i is coordinate i. The pivot of a
nonzero vector is its lowest set bit, so canonical row order is integer order of
the pivots. The int kernels (``reduce_bits``, ``rank_of_bits``, ...) are shared by
the matroid, flat and coloring modules; the ``gf2_*`` functions are the typed API.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from utils.constants import Limits
from .errors import MatroidInputError, RefusalError


@dataclass(frozen=True, order=True)
class Gf2Vec:
    """
    An n-dimensional vector over GF(2).

    Attributes:
        width: Dimension n (1 <= n <= 62)
        bits: n-bit value, bit i = coordinate i
    """
    width: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.width <= Limits.MAX_WIDTH:
            raise MatroidInputError(
                f"width {self.width} outside 1..{Limits.MAX_WIDTH}"
            )
        if not 0 <= self.bits < (1 << self.width):
            raise MatroidInputError(
                f"value {self.bits:#x} does not fit in width {self.width}"
            )

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: "Gf2Vec") -> "Gf2Vec":
        if not isinstance(other, Gf2Vec):
            return NotImplemented
        if other.width != self.width:
            raise MatroidInputError(f"cannot add width {self.width} and width {other.width}")
        return Gf2Vec(self.width, self.bits ^ other.bits)

    def to_hex(self) -> str:
        """Lowercase hex of the integer id (width is carried separately)."""
        return format(self.bits, "x")

    @classmethod
    def from_hex(cls, width: int, text: str) -> "Gf2Vec":
        try:
            value = int(text, 16)
        except ValueError:
            raise MatroidInputError(f"not a hex vector id: {text!r}") from None
        return cls(width, value)

    @classmethod
    def from_coordinates(cls, text: str) -> "Gf2Vec":
        """
        Build a vector from a 0/1 string, coordinate 0 first.

        ``"110"`` has coordinates 0 and 1 set, i.e. bits ``0b011``.
        """
        if not text or set(text) - {"0", "1"}:
            raise MatroidInputError(f"not a 0/1 coordinate string: {text!r}")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
        return cls(len(text), bits)

    def coordinates(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.width))


@dataclass(frozen=True)
class Gf2Rref:
    """
    Reduced row echelon basis of a subspace.

    Attributes:
        width: Dimension n of the ambient space
        rows: Row values, pivots strictly increasing; each pivot column is zero
              in all other rows
    """
    width: int
    rows: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(pivot_of(row) for row in self.rows)

    @property
    def vectors(self) -> Tuple[Gf2Vec, ...]:
        return tuple(Gf2Vec(self.width, row) for row in self.rows)

    def contains(self, bits: int) -> bool:
        """True if ``bits`` lies in the span (zero included)."""
        for row in self.rows:
            if bits & (row & -row):
                bits ^= row
        return bits == 0

    def is_valid(self) -> bool:
        """Check every Gf2Rref invariant."""
        if len(self.rows) > self.width:
            return False
        last = -1
        for row in self.rows:
            if row == 0 or row >= (1 << self.width):
                return False
            pivot = pivot_of(row)
            if pivot <= last:
                return False
            last = pivot
            mask = 1 << pivot
            if any(other & mask for other in self.rows if other != row):
                return False
        return True


# ---------------------------------------------------------------------------
# Int kernels
# ---------------------------------------------------------------------------

def pivot_of(bits: int) -> int:
    """Index of the lowest set bit (the pivot). ``bits`` must be nonzero."""
    return (bits & -bits).bit_length() - 1


def reduce_bits(values: Iterable[int]) -> Dict[int, int]:
    """
    Echelon basis keyed by pivot mask.

    Each stored row has a distinct lowest bit; reducing a value by the row that
    owns its lowest bit strictly raises that lowest bit, so the loop terminates.
    """
    basis: Dict[int, int] = {}
    for value in values:
        while value:
            low = value & -value
            row = basis.get(low)
            if row is None:
                basis[low] = value
                break
            value ^= row
    return basis


def rank_of_bits(values: Iterable[int]) -> int:
    return len(reduce_bits(values))


def in_span(basis: Dict[int, int], value: int) -> bool:
    """Membership test against a ``reduce_bits`` basis."""
    while value:
        row = basis.get(value & -value)
        if row is None:
            return False
        value ^= row
    return True


def rref_of_bits(values: Iterable[int]) -> Tuple[int, ...]:
    """Canonical reduced rows of the span of ``values``."""
    rows = [row for _, row in sorted(reduce_bits(values).items())]
    # Clear each pivot column from the rows above it, highest pivot first
    for i in range(len(rows) - 1, -1, -1):
        mask = rows[i] & -rows[i]
        for j in range(i):
            if rows[j] & mask:
                rows[j] ^= rows[i]
    return tuple(rows)


def span_bits(rows: Sequence[int]) -> List[int]:
    """
    All nonzero vectors of the span, in Gray-code order of the row subsets.

    Raises:
        RefusalError: More rows than the enumeration cap
    """
    if len(rows) > Limits.SPAN_ENUMERATION_RANK:
        raise RefusalError(
            f"span of rank {len(rows)} has 2^{len(rows)} - 1 vectors; "
            f"enumeration is capped at rank {Limits.SPAN_ENUMERATION_RANK}",
            limit=Limits.SPAN_ENUMERATION_RANK,
            required=len(rows),
        )
    out: List[int] = []
    value = 0
    for i in range(1, 1 << len(rows)):
        value ^= rows[pivot_of(i)]
        out.append(value)
    return out


# ---------------------------------------------------------------------------
# Typed API
# ---------------------------------------------------------------------------

def _common_width(vectors: Iterable[Gf2Vec]) -> Tuple[int, List[int]]:
    widths = set()
    bits: List[int] = []
    for vec in vectors:
        if not isinstance(vec, Gf2Vec):
            raise MatroidInputError(f"expected Gf2Vec, got {type(vec).__name__}")
        widths.add(vec.width)
        bits.append(vec.bits)
    if len(widths) > 1:
        raise MatroidInputError(f"mixed vector widths: {sorted(widths)}")
    return (widths.pop() if widths else 0), bits


def gf2_rank(vectors: Iterable[Gf2Vec]) -> int:
    """
    Dimension of the span of ``vectors``.

    Raises:
        MatroidInputError: Vectors of different widths
    """
    _, bits = _common_width(vectors)
    return rank_of_bits(bits)


def gf2_rref(vectors: Iterable[Gf2Vec], width: int = 0) -> Gf2Rref:
    """
    Canonical reduced row echelon basis of the span.

    Args:
        vectors: Vectors of one width
        width: Width to use when ``vectors`` is empty

    Returns:
        The unique Gf2Rref of the spanned subspace
    """
    found, bits = _common_width(vectors)
    if found and width and found != width:
        raise MatroidInputError(f"vectors have width {found}, expected {width}")
    return Gf2Rref(found or width, rref_of_bits(bits))


def gf2_span_nonzero(basis: Gf2Rref) -> FrozenSet[Gf2Vec]:
    """All 2^rank - 1 nonzero vectors spanned by ``basis``."""
    return frozenset(Gf2Vec(basis.width, v) for v in span_bits(basis.rows))
