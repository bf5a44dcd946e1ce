"""
Tests for matroid spec and partition files.
"""

import pytest

from core.errors import MatroidInputError
from core.io import load_matroid, load_partition, matroid_from_spec, parse_element
from core.matroids import BinaryMatroid, PartitionMatroid, RestrictedMatroid, UniformMatroid


@pytest.mark.parametrize("value,expected", [(5, 5), ("ff", 255), ("0x1f", 31), ("A", 10)])
def test_parse_element(value, expected):
    assert parse_element(value) == expected


@pytest.mark.parametrize("value", [True, "zz", None, 1.5, [1]])
def test_parse_element_rejects(value):
    with pytest.raises(MatroidInputError):
        parse_element(value)


class TestSpecs:
    def test_binary(self):
        assert matroid_from_spec({"kind": "binary", "n": 3}) == BinaryMatroid(3)

    def test_uniform(self):
        m = matroid_from_spec({"kind": "uniform", "size": 5, "rank": 2})
        assert isinstance(m, UniformMatroid)
        assert m.full_rank() == 2

    def test_partition(self):
        m = matroid_from_spec({"kind": "partition", "classes": [[0, 1], ["2"]]})
        assert isinstance(m, PartitionMatroid)
        assert m.rank({0, 1, 2}) == 2

    def test_restriction_round_trips_through_to_spec(self):
        spec = {"kind": "restriction", "parent": {"kind": "binary", "n": 3}, "subset": ["1", "2", "3", "4"]}
        m = matroid_from_spec(spec)
        assert isinstance(m, RestrictedMatroid)
        assert m.ground == (1, 2, 3, 4)
        assert matroid_from_spec(m.to_spec()) == m

    @pytest.mark.parametrize(
        "spec",
        [
            [],
            {"kind": "graphic"},
            {"kind": "binary"},
            {"kind": "binary", "n": "3"},
            {"kind": "binary", "n": True},
            {"kind": "partition"},
            {"kind": "partition", "classes": [[0, 1], [1, 2]]},
            {"kind": "restriction", "parent": {"kind": "binary", "n": 2}, "subset": [4]},
            {"kind": "restriction", "parent": {"kind": "binary", "n": 2}},
        ],
    )
    def test_malformed(self, spec):
        with pytest.raises(MatroidInputError):
            matroid_from_spec(spec)


class TestFiles:
    def test_load_matroid(self, write_json):
        assert load_matroid(write_json({"kind": "binary", "n": 4})) == BinaryMatroid(4)

    def test_load_matroid_from_partition_file(self, write_json):
        path = write_json({"matroid": {"kind": "binary", "n": 2}, "parts": [[1, 2], [3]]})
        assert load_matroid(path) == BinaryMatroid(2)

    def test_load_partition(self, write_json):
        path = write_json({"matroid": {"kind": "binary", "n": 2}, "parts": [["3"], [1, 2]]})
        partition = load_partition(path)
        assert partition.sorted_parts == ((3,), (1, 2))

    def test_partition_must_cover(self, write_json):
        path = write_json({"matroid": {"kind": "binary", "n": 2}, "parts": [[1, 2]]})
        with pytest.raises(MatroidInputError):
            load_partition(path)

    def test_partition_needs_parts(self, write_json):
        with pytest.raises(MatroidInputError):
            load_partition(write_json({"matroid": {"kind": "binary", "n": 2}}))
        with pytest.raises(MatroidInputError):
            load_partition(write_json({"parts": [[1]]}))

    def test_missing_file(self, tmp_path):
        with pytest.raises(MatroidInputError, match="not found"):
            load_matroid(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(MatroidInputError, match="invalid JSON"):
            load_matroid(path)
