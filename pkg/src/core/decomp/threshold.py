"""
Dimension thresholds beyond which the binary matroid has no (b,c)-decomposition.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Any, Dict, Optional

from ..coloring import predicted_coloring_number
from ..errors import MatroidInputError
from ..flats import count_flats_exact
from .covering import minimum_uncolorable_rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Threshold:
    """
    d is the least rank whose flats are not b-colorable; no binary matroid of
    dimension n > n_max admits a (b,c)-decomposition.
    """
    b: int
    c: int
    d: int
    n_max: int

    @property
    def statement(self) -> str:
        return f"no ({self.b},{self.c})-decomposition exists for n > {self.n_max}"

    def to_dict(self) -> Dict[str, Any]:
        return {"b": self.b, "c": self.c, "d": self.d, "n_max": self.n_max, "statement": self.statement}


def _check_params(b: int, c: int) -> None:
    if b < 1 or c < 1:
        raise MatroidInputError(f"b and c must be at least 1, got b={b}, c={c}")


def theorem_threshold(b: int, c: int) -> Threshold:
    """n_max = 4 c^2 2^(d^2 + d) with d = minimum_uncolorable_rank(b)."""
    _check_params(b, c)
    d = minimum_uncolorable_rank(b)
    return Threshold(b, c, d, 4 * c * c * (1 << (d * d + d)))


def exact_counting_crossover(b: int, c: int, n_limit: Optional[int] = None) -> Optional[int]:
    """
    First n at which the exact number of rank-d flats exceeds what n parts of
    size c * k can cover, n * C(ck, 2) * C(2^n, d-2) with k = ceil(2^n / n).

    The closed-form threshold relaxes both sides; with exact counts the
    argument already applies at far smaller n. Scans n from d up to
    ``n_limit`` (default: the closed-form n_max + 1) and returns None if the
    count never wins in that range.
    """
    threshold = theorem_threshold(b, c)
    d = threshold.d
    n_limit = threshold.n_max + 1 if n_limit is None else n_limit
    for n in range(max(d, 2), n_limit + 1):
        capacity = n * comb(c * predicted_coloring_number(n), 2) * comb(1 << n, d - 2)
        if count_flats_exact(n, d) > capacity:
            logger.debug("b=%d c=%d: exact count of rank-%d flats beats capacity at n=%d", b, c, d, n)
            return n
    return None
