"""
Tests for the exhaustive decomposition search.
"""

import pytest

from core.decomp import (
    DecompositionSearch,
    Partition,
    SearchOutcome,
    search_decomposition,
    verify_decomposition,
)
from core.errors import RefusalError
from core.matroids import BinaryMatroid, partition_matroid, uniform_matroid


def set_partitions(elements):
    """All set partitions of ``elements`` (naive)."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for smaller in set_partitions(rest):
        yield [[first]] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]


def naive_exists(matroid, b, c):
    for parts in set_partitions(list(matroid.ground)):
        if verify_decomposition(Partition.from_parts(matroid, parts), b, c).is_valid:
            return True
    return False


def test_set_partitions_of_three():
    assert len(list(set_partitions([1, 2, 3]))) == 5


@pytest.mark.parametrize("b", [1, 2])
@pytest.mark.parametrize("c", [1, 2])
def test_agrees_with_naive_enumeration(b, c):
    plane = BinaryMatroid(2)
    result = search_decomposition(plane, b, c)
    expected = SearchOutcome.FOUND if naive_exists(plane, b, c) else SearchOutcome.NONEXISTENT
    assert result.outcome is expected


@pytest.mark.parametrize(
    "matroid",
    [uniform_matroid(4, 2), uniform_matroid(5, 3), partition_matroid([[0, 1], [2], [3, 4]])],
    ids=["U24", "U35", "partition"],
)
def test_agrees_with_naive_enumeration_on_fixtures(matroid):
    result = search_decomposition(matroid, 1, 1)
    expected = SearchOutcome.FOUND if naive_exists(matroid, 1, 1) else SearchOutcome.NONEXISTENT
    assert result.outcome is expected


def test_plane_first_decomposition():
    result = search_decomposition(BinaryMatroid(2), 1, 1)
    assert result.outcome is SearchOutcome.FOUND
    assert result.partition.sorted_parts == ((1, 2), (3,))


def test_fano_with_double_parts():
    result = search_decomposition(BinaryMatroid(3), 1, 2)
    assert result.outcome is SearchOutcome.FOUND
    assert result.partition.sorted_parts == ((1, 2, 3, 4, 5, 6), (7,))
    assert verify_decomposition(result.partition, 1, 2).is_valid


def test_fano_has_no_tight_decomposition():
    result = search_decomposition(BinaryMatroid(3), 1, 1)
    assert result.outcome is SearchOutcome.NONEXISTENT
    assert result.partition is None
    assert result.params.k == 3


def test_partition_matroid_singletons():
    result = search_decomposition(partition_matroid([[0], [1]]), 1, 1)
    assert result.outcome is SearchOutcome.FOUND
    assert result.to_dict()["parts"] == [[0], [1]]


def test_uniform_matroid_pairs():
    result = search_decomposition(uniform_matroid(4, 2), 1, 1)
    assert result.outcome is SearchOutcome.FOUND
    assert [len(p) for p in result.partition.parts] == [2, 2]


def test_node_budget_exhausts():
    result = search_decomposition(BinaryMatroid(2), 1, 1, budget=1)
    assert result.outcome is SearchOutcome.EXHAUSTED
    assert "node budget" in result.reason
    data = result.to_dict()
    assert data["outcome"] == "exhausted"
    assert "parts" not in data


def test_large_ground_set_is_refused():
    with pytest.raises(RefusalError):
        DecompositionSearch(BinaryMatroid(5), 1, 1)


def test_search_is_repeatable():
    search = DecompositionSearch(BinaryMatroid(3), 1, 1)
    first = search.run()
    second = search.run()
    assert first.outcome is second.outcome
    assert first.nodes == second.nodes
