"""
Tests for the GF(2) kernels and typed API.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import MatroidInputError, RefusalError
from core.gf2core import (
    Gf2Rref,
    Gf2Vec,
    gf2_rank,
    gf2_rref,
    gf2_span_nonzero,
    in_span,
    reduce_bits,
    rref_of_bits,
    span_bits,
)


def vec(text):
    return Gf2Vec.from_coordinates(text)


def bit_lists(width):
    return st.lists(st.integers(min_value=0, max_value=(1 << width) - 1), max_size=10)


class TestGf2Vec:
    def test_coordinates_are_read_first_coordinate_first(self):
        assert vec("110").bits == 0b011
        assert vec("011").bits == 0b110
        assert vec("011").coordinates() == "011"

    def test_hex_round_trip_keeps_the_value(self):
        v = Gf2Vec(5, 0b10110)
        assert v.to_hex() == "16"
        assert Gf2Vec.from_hex(5, "16") == v

    def test_rejects_values_wider_than_the_width(self):
        with pytest.raises(MatroidInputError):
            Gf2Vec(3, 8)
        with pytest.raises(MatroidInputError):
            Gf2Vec(63, 1)

    def test_xor_requires_equal_widths(self):
        assert (vec("100") ^ vec("010")) == vec("110")
        with pytest.raises(MatroidInputError):
            vec("10") ^ vec("100")

    def test_zero_vector_is_representable(self):
        assert Gf2Vec(4, 0).is_zero


class TestRank:
    def test_empty_set_has_rank_zero(self):
        assert gf2_rank([]) == 0

    def test_full_ground_set_of_dimension_three(self):
        assert gf2_rank(Gf2Vec(3, b) for b in range(1, 8)) == 3

    def test_dependent_triple(self):
        assert gf2_rank([vec("001"), vec("010"), vec("011")]) == 2

    def test_mixed_widths_are_rejected(self):
        with pytest.raises(MatroidInputError):
            gf2_rank([Gf2Vec(3, 1), Gf2Vec(4, 1)])

    @given(bit_lists(6), bit_lists(6))
    def test_rank_is_monotone_and_bounded(self, xs, ys):
        small = [Gf2Vec(6, x) for x in xs]
        large = small + [Gf2Vec(6, y) for y in ys]
        assert gf2_rank(small) <= gf2_rank(large)
        assert gf2_rank(large) <= min(len(large), 6)


class TestRref:
    def test_single_vector_is_canonical(self):
        assert gf2_rref([vec("101")]).rows == (vec("101").bits,)

    def test_second_pivot_column_is_cleared(self):
        basis = gf2_rref([vec("110"), vec("011")])
        assert basis.rows == (vec("101").bits, vec("011").bits)
        assert basis.pivots == (0, 1)

    def test_empty_input_uses_the_given_width(self):
        basis = gf2_rref([], width=4)
        assert basis == Gf2Rref(4, ())

    @given(bit_lists(7))
    def test_idempotent_and_span_preserving(self, values):
        vectors = [Gf2Vec(7, v) for v in values]
        basis = gf2_rref(vectors, width=7)
        assert basis.is_valid()
        assert gf2_rref(basis.vectors, width=7) == basis
        assert gf2_rank(vectors) == basis.rank
        span = gf2_span_nonzero(basis)
        assert all(v.is_zero or v in span for v in vectors)

    @settings(max_examples=60)
    @given(bit_lists(8), st.randoms(use_true_random=False))
    def test_equal_spans_give_identical_bases(self, values, rnd):
        mixed = list(values)
        for _ in range(len(values)):
            i, j = rnd.randrange(len(values)), rnd.randrange(len(values))
            mixed.append(values[i] ^ values[j])
        rnd.shuffle(mixed)
        assert rref_of_bits(mixed) == rref_of_bits(values)


class TestSpan:
    def test_span_of_two_rows(self):
        basis = Gf2Rref(3, (vec("100").bits, vec("010").bits))
        assert gf2_span_nonzero(basis) == {vec("100"), vec("010"), vec("110")}

    def test_span_of_nothing_is_empty(self):
        assert gf2_span_nonzero(Gf2Rref(3, ())) == frozenset()

    @pytest.mark.parametrize("rank", [0, 1, 3, 6])
    def test_span_size_is_two_to_the_rank_minus_one(self, rank):
        rows = tuple(1 << i for i in range(rank))
        assert len(set(span_bits(rows))) == (1 << rank) - 1

    def test_span_enumeration_is_capped(self):
        with pytest.raises(RefusalError) as info:
            span_bits(tuple(1 << i for i in range(26)))
        assert info.value.limit == 25

    def test_in_span_agrees_with_enumeration(self):
        rng = random.Random(3)
        values = [rng.randrange(1, 1 << 6) for _ in range(3)]
        basis = reduce_bits(values)
        members = set(span_bits(rref_of_bits(values))) | {0}
        for candidate in range(1 << 6):
            assert in_span(basis, candidate) == (candidate in members)
