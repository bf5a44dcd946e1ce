"""
Tests for the dimension thresholds and the exact counting crossover.
"""

import pytest

from core.decomp import Threshold, exact_counting_crossover, minimum_uncolorable_rank, theorem_threshold
from core.errors import MatroidInputError


@pytest.mark.parametrize(
    "b,c,d,n_max",
    [
        (1, 1, 2, 256),
        (1, 2, 2, 1024),
        (2, 1, 3, 16384),
        (2, 2, 3, 65536),
    ],
)
def test_threshold_table(b, c, d, n_max):
    threshold = theorem_threshold(b, c)
    assert threshold == Threshold(b, c, d, n_max)
    assert threshold.statement == f"no ({b},{c})-decomposition exists for n > {n_max}"


@pytest.mark.parametrize("b", range(1, 21))
def test_threshold_follows_the_minimum_rank(b):
    for c in (1, 3):
        threshold = theorem_threshold(b, c)
        d = minimum_uncolorable_rank(b)
        assert threshold.d == d
        assert threshold.n_max == 4 * c * c * 2 ** (d * d + d)


def test_threshold_grows_with_c():
    assert theorem_threshold(1, 3).n_max == 9 * theorem_threshold(1, 1).n_max


@pytest.mark.parametrize("b,c", [(0, 1), (1, 0), (-2, 3)])
def test_rejects_nonpositive_parameters(b, c):
    with pytest.raises(MatroidInputError):
        theorem_threshold(b, c)
    with pytest.raises(MatroidInputError):
        exact_counting_crossover(b, c)


def test_to_dict():
    assert theorem_threshold(1, 1).to_dict() == {
        "b": 1,
        "c": 1,
        "d": 2,
        "n_max": 256,
        "statement": "no (1,1)-decomposition exists for n > 256",
    }


class TestCrossover:
    @pytest.mark.parametrize("b,c,n", [(1, 1, 4), (1, 2, 13)])
    def test_known_values(self, b, c, n):
        assert exact_counting_crossover(b, c) == n

    def test_limit_before_the_crossover(self):
        assert exact_counting_crossover(1, 2, n_limit=12) is None
        assert exact_counting_crossover(1, 2, n_limit=13) == 13

    @pytest.mark.parametrize("c", [1, 2, 3])
    def test_far_below_the_closed_form(self, c):
        for b in (1, 2):
            crossover = exact_counting_crossover(b, c)
            assert crossover is not None
            assert crossover < theorem_threshold(b, c).n_max
