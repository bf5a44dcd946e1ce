"""
Shared fixtures. Puts ``src/`` on the import path the same way run.py does.
"""

import json
import sys
from pathlib import Path

import pytest

SRC = Path(__file__).resolve().parent.parent / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from core.matroids import BinaryMatroid  # noqa: E402
from utils.config import Config  # noqa: E402


@pytest.fixture
def fano():
    """The binary matroid of dimension 3 (seven points)."""
    return BinaryMatroid(3)


@pytest.fixture
def config(tmp_path):
    """Config backed by a throwaway INI file."""
    return Config(tmp_path / "matroidkit.ini")


@pytest.fixture
def ini_path(tmp_path):
    return str(tmp_path / "cli.ini")


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document to a temporary file and return its path."""
    counter = {"n": 0}

    def _write(data, name=None):
        counter["n"] += 1
        path = tmp_path / (name or f"input{counter['n']}.json")
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write
