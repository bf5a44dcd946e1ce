"""
End-to-end tests of the command line through cli.run.
"""

import argparse
import csv
import io
import json

import pytest

from cli import run
from cli.parser import build_parser, element_pair
from utils.config import Config
from utils.constants import ExitCodes

PLANE = {"kind": "binary", "n": 2}
FANO = {"kind": "binary", "n": 3}


@pytest.fixture
def invoke(ini_path):
    """Run a command against a throwaway settings file; returns (exit code, stdout)."""

    def _invoke(*argv):
        out = io.StringIO()
        code = run(list(argv) + ["--config", ini_path], stdout=out)
        return code, out.getvalue()

    return _invoke


def as_json(text):
    return json.loads(text)


class TestColor:
    def test_coloring_number_of_the_fano_plane(self, invoke):
        code, out = invoke("color", "--n", "3")
        data = as_json(out)
        assert code == ExitCodes.OK
        assert data["coloring_number"] == 3
        assert data["density"] == 3
        assert data["oracles_agree"] is True
        assert data["match"] is True
        assert len(data["classes"]) == 3

    def test_infeasible_k(self, invoke):
        code, out = invoke("color", "--n", "3", "--k", "2")
        data = as_json(out)
        assert code == ExitCodes.REFUTED
        assert data["feasible"] is False
        assert data["dense_set"] == list(range(1, 8))

    def test_feasible_k(self, invoke):
        code, out = invoke("color", "--n", "2", "--k", "2")
        assert code == ExitCodes.OK
        assert as_json(out)["feasible"] is True

    def test_matroid_from_file(self, invoke, write_json):
        path = write_json({"kind": "partition", "classes": [[0, 1, 2], [3]]})
        code, out = invoke("color", "--input", path)
        assert code == ExitCodes.OK
        assert as_json(out)["coloring_number"] == 3
        assert "prediction" not in as_json(out)


class TestFlats:
    def test_lines_of_the_fano_plane(self, invoke):
        code, out = invoke("flats", "--n", "3", "--d", "2")
        data = as_json(out)
        assert code == ExitCodes.OK
        assert data["count"] == 7
        assert all(len(f["elements"]) == 3 for f in data["flats"])

    def test_planes_through_a_pair(self, invoke):
        code, out = invoke("flats", "--n", "4", "--d", "3", "--pair", "3,12")
        data = as_json(out)
        assert data["count"] == 3
        assert all({3, 12} <= set(f["elements"]) for f in data["flats"])

    def test_budget_refusal(self, invoke):
        code, _ = invoke("flats", "--n", "5", "--d", "2", "--budget", "10")
        assert code == ExitCodes.EXHAUSTED

    def test_table_format(self, invoke):
        code, out = invoke("flats", "--n", "2", "--d", "2", "--format", "table")
        lines = out.splitlines()
        assert lines[0].split() == ["index", "basis", "elements"]
        assert len(lines) == 3


class TestCensus:
    def test_defaults_to_csv(self, invoke):
        code, out = invoke("census", "--n", "2-3")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == ExitCodes.OK
        assert [(r["n"], r["d"]) for r in rows] == [("2", "1"), ("2", "2"), ("3", "1"), ("3", "2"), ("3", "3")]
        assert all(r["exact"] == r["enumerated"] for r in rows)

    def test_spreadsheet_export(self, invoke, tmp_path):
        from openpyxl import load_workbook

        target = tmp_path / "census.xlsx"
        code, out = invoke("census", "--n", "3", "--output", str(target))
        assert code == ExitCodes.OK
        assert out == ""
        ws = load_workbook(target).active
        assert [c.value for c in ws[1]] == ["n", "d", "exact", "lower_bound", "relaxed_bound", "enumerated", "note"]
        assert ws.max_row == 4


class TestVerify:
    def test_valid(self, invoke, write_json):
        path = write_json({"matroid": PLANE, "parts": [[1, 2], [3]]})
        code, out = invoke("verify", "--input", path)
        assert code == ExitCodes.OK
        assert as_json(out)["verdict"] == "valid"

    def test_refuted_and_replayed(self, invoke, write_json):
        path = write_json({"matroid": PLANE, "parts": [[1], [2], [3]]})
        code, out = invoke("verify", "--input", path)
        data = as_json(out)
        assert code == ExitCodes.REFUTED
        assert data["transversal"] == [1, 2, 3]
        assert data["replayed"] is True

    def test_same_output_for_any_worker_count(self, invoke, write_json):
        path = write_json({"matroid": FANO, "parts": [[1, 6], [2, 5], [3, 4, 7]]})
        _, one = invoke("verify", "--input", path, "--c", "2", "--workers", "1")
        _, four = invoke("verify", "--input", path, "--c", "2", "--workers", "4")
        assert one == four

    def test_input_is_remembered(self, invoke, write_json, ini_path):
        path = write_json({"matroid": PLANE, "parts": [[1, 2], [3]]})
        invoke("verify", "--input", path)
        assert len(Config(ini_path).get_recent_inputs()) == 1


class TestWitness:
    def test_found(self, invoke, write_json):
        path = write_json({"matroid": FANO, "parts": [[e] for e in range(1, 8)]})
        code, out = invoke("witness", "--input", path)
        data = as_json(out)
        assert code == ExitCodes.REFUTED
        assert data["verdict"] == "witness_flat"
        assert len(data["flat_elements"]) == 3
        assert data["replayed"] is True

    def test_not_found(self, invoke, write_json):
        path = write_json({"matroid": PLANE, "parts": [[1, 2], [3]]})
        code, out = invoke("witness", "--input", path)
        assert code == ExitCodes.OK
        assert as_json(out)["verdict"] == "no_witness"


def test_covering_rows(invoke, write_json):
    path = write_json({"matroid": FANO, "parts": [[e] for e in range(1, 8)]})
    code, out = invoke("covering", "--input", path, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == ExitCodes.OK
    assert [r["d"] for r in rows] == ["2", "3"]
    assert rows[0]["covered"] == "0"
    assert rows[0]["uncovered"] == "7"


class TestSearch:
    def test_found(self, invoke):
        code, out = invoke("search", "--n", "3", "--c", "2")
        assert code == ExitCodes.OK
        assert as_json(out)["parts"] == [[1, 2, 3, 4, 5, 6], [7]]

    def test_nonexistent(self, invoke):
        code, out = invoke("search", "--n", "3")
        assert code == ExitCodes.REFUTED
        assert as_json(out)["outcome"] == "nonexistent"

    def test_exhausted(self, invoke):
        code, out = invoke("search", "--n", "2", "--budget", "1")
        assert code == ExitCodes.EXHAUSTED
        assert as_json(out)["outcome"] == "exhausted"

    def test_refused(self, invoke):
        code, out = invoke("search", "--n", "5")
        assert code == ExitCodes.EXHAUSTED
        assert out == ""


def test_bounds(invoke):
    code, out = invoke("bounds", "--b", "1", "--c", "1-2")
    rows = as_json(out)["rows"]
    assert code == ExitCodes.OK
    assert [(r["n_max"], r["crossover"]) for r in rows] == [(256, 4), (1024, 13)]


def test_spotcheck(invoke):
    code, out = invoke("spotcheck", "--n", "3", "--samples", "20", "--seed", "3")
    data = as_json(out)
    assert code == ExitCodes.OK
    assert data["samples"] == 20
    assert data["violations"] == 0


SINGLETON_FANO = {"matroid": FANO, "parts": [[e] for e in range(1, 8)]}
MIXED_FANO = {"matroid": FANO, "parts": [[1, 6], [2, 5], [3, 4, 7]]}


@pytest.mark.parametrize(
    "argv,document",
    [
        (["color", "--n", "4"], None),
        (["color", "--n", "3", "--k", "2"], None),
        (["flats", "--n", "4", "--d", "2"], None),
        (["census", "--n", "2-4"], None),
        (["verify", "--c", "2"], MIXED_FANO),
        (["verify"], SINGLETON_FANO),
        (["witness"], SINGLETON_FANO),
        (["witness"], MIXED_FANO),
        (["covering"], SINGLETON_FANO),
        (["search", "--n", "3", "--c", "2"], None),
        (["bounds", "--b", "1-2", "--c", "1-2"], None),
        (["spotcheck", "--n", "3", "--samples", "10", "--seed", "1"], None),
    ],
)
def test_stdout_is_the_same_for_one_and_four_workers(invoke, write_json, argv, document):
    if document is not None:
        argv = argv + ["--input", write_json(document)]
    one = invoke(*argv, "--workers", "1")
    four = invoke(*argv, "--workers", "4")
    assert one == four
    assert one[1] != ""


def test_pair_ids_are_decimal_unless_prefixed(capsys):
    assert element_pair("10,0x10") == [10, 16]
    assert element_pair("3,0xc") == element_pair("3,12")
    with pytest.raises(argparse.ArgumentTypeError):
        element_pair("f,1")
    with pytest.raises(SystemExit):
        build_parser().parse_args(["flats", "--help"])
    assert "0x-prefixed hex" in " ".join(capsys.readouterr().out.split())


class TestErrors:
    def test_missing_file(self, invoke, tmp_path):
        code, _ = invoke("verify", "--input", str(tmp_path / "nope.json"))
        assert code == ExitCodes.USAGE

    def test_malformed_json(self, invoke, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("[1, 2", encoding="utf-8")
        code, _ = invoke("color", "--input", str(path))
        assert code == ExitCodes.USAGE

    def test_overlapping_parts(self, invoke, write_json):
        path = write_json({"matroid": PLANE, "parts": [[1, 2], [2, 3]]})
        code, _ = invoke("verify", "--input", path)
        assert code == ExitCodes.USAGE

    def test_unknown_command(self):
        assert run(["frobnicate"], stdout=io.StringIO()) == ExitCodes.USAGE

    def test_bad_range(self, invoke):
        code, _ = invoke("census", "--n", "5-2")
        assert code == ExitCodes.USAGE

    def test_dimension_out_of_range(self, invoke):
        code, _ = invoke("color", "--n", "1")
        assert code == ExitCodes.USAGE

    def test_missing_input(self, invoke):
        code, _ = invoke("verify")
        assert code == ExitCodes.USAGE
