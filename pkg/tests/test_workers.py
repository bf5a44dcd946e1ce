"""
Tests for sharded execution on the thread pool.
"""

import pytest

from core.workers import run_sharded, split_range


@pytest.mark.parametrize("workers", [1, 2, 8])
def test_results_come_back_in_shard_order(workers):
    assert run_sharded(lambda x: x * x, list(range(20)), workers) == [x * x for x in range(20)]


def test_empty_shards():
    assert run_sharded(lambda x: x, [], 4) == []


def test_lowest_failing_shard_is_reraised():
    def func(x):
        if x in (3, 7):
            raise KeyError(x)
        return x

    with pytest.raises(KeyError) as info:
        run_sharded(func, list(range(10)), 4)
    assert info.value.args == (3,)

def test_inline_run_stops_at_the_first_accepted_result():
    calls = []

    def func(x):
        calls.append(x)
        return x

    assert run_sharded(func, list(range(10)), 1, stop_when=lambda r: r == 3) == [0, 1, 2, 3]
    assert calls == [0, 1, 2, 3]


def test_pooled_run_cuts_at_the_same_result():
    assert run_sharded(lambda x: x, list(range(10)), 4, stop_when=lambda r: r == 3) == [0, 1, 2, 3]


def test_failures_after_the_accepted_result_are_ignored():
    def func(x):
        if x == 7:
            raise KeyError(x)
        return x

    for workers in (1, 4):
        assert run_sharded(func, list(range(10)), workers, stop_when=lambda r: r == 2) == [0, 1, 2]



def test_rejects_zero_workers():
    with pytest.raises(ValueError):
        run_sharded(lambda x: x, [1], 0)


@pytest.mark.parametrize("start,stop,parts", [(0, 10, 3), (5, 6, 4), (0, 0, 2), (0, 100, 1)])
def test_split_range_is_contiguous(start, stop, parts):
    pieces = split_range(start, stop, parts)
    assert [i for piece in pieces for i in piece] == list(range(start, stop))
    assert len(pieces) <= max(parts, 1)
    sizes = [len(p) for p in pieces]
    assert max(sizes) - min(sizes) <= 1
