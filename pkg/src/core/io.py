"""
JSON input files: matroid specs and partitions.

Matroid spec:   {"kind": "binary", "n": 4}
                {"kind": "partition", "classes": [[...], ...]}
                {"kind": "uniform", "size": m, "rank": r}
                {"kind": "restriction", "parent": <spec>, "subset": [...]}
Partition file: {"matroid": <spec>, "parts": [[ids...], ...]}

Element ids are integers or hex strings ("0x" prefix optional).
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from .decomp.models import Partition
from .errors import MatroidInputError
from .matroids import MatroidOracle, binary_matroid, partition_matroid, restrict, uniform_matroid

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def parse_element(value: Any) -> int:
    """An element id from an int or a hex string."""
    if isinstance(value, bool):
        raise MatroidInputError(f"not an element id: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 16)
        except ValueError:
            pass
    raise MatroidInputError(f"not an element id: {value!r}")


def _elements(values: Any, what: str) -> List[int]:
    if not isinstance(values, list):
        raise MatroidInputError(f"{what} must be a list of element ids")
    return [parse_element(v) for v in values]


def _int_field(spec: Dict[str, Any], key: str) -> int:
    value = spec.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise MatroidInputError(f"matroid spec field {key!r} must be an integer, got {value!r}")
    return value


def matroid_from_spec(spec: Any) -> MatroidOracle:
    """
    Build a matroid from its JSON description.

    Raises:
        MatroidInputError: Unknown kind, missing or malformed fields
    """
    if not isinstance(spec, dict):
        raise MatroidInputError("matroid spec must be a JSON object")
    kind = spec.get("kind")
    if kind == "binary":
        return binary_matroid(_int_field(spec, "n"))
    if kind == "uniform":
        return uniform_matroid(_int_field(spec, "size"), _int_field(spec, "rank"))
    if kind == "partition":
        classes = spec.get("classes")
        if not isinstance(classes, list):
            raise MatroidInputError("partition spec needs a 'classes' list")
        return partition_matroid(_elements(c, "a class") for c in classes)
    if kind == "restriction":
        parent = matroid_from_spec(spec.get("parent"))
        return restrict(parent, _elements(spec.get("subset"), "'subset'"))
    raise MatroidInputError(f"unknown matroid kind {kind!r}")


def partition_from_dict(data: Any) -> Partition:
    if not isinstance(data, dict) or "matroid" not in data:
        raise MatroidInputError("partition file must be an object with 'matroid' and 'parts'")
    matroid = matroid_from_spec(data["matroid"])
    parts = data.get("parts")
    if not isinstance(parts, list):
        raise MatroidInputError("partition file needs a 'parts' list")
    return Partition.from_parts(matroid, (_elements(p, "a part") for p in parts))


def read_json(path: PathLike) -> Any:
    """
    Parse a UTF-8 JSON file.

    Raises:
        MatroidInputError: Missing file or invalid JSON
    """
    file_path = Path(path)
    if not file_path.exists():
        raise MatroidInputError(f"File not found: {file_path}")
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, UnicodeDecodeError) as e:
        raise MatroidInputError(f"cannot read {file_path}: {e}") from None
    except json.JSONDecodeError as e:
        raise MatroidInputError(f"{file_path}: invalid JSON at line {e.lineno}: {e.msg}") from None


def load_matroid(path: PathLike) -> MatroidOracle:
    """Load a matroid spec file; a partition file's matroid is accepted too."""
    data = read_json(path)
    if isinstance(data, dict) and "matroid" in data and "kind" not in data:
        data = data["matroid"]
    matroid = matroid_from_spec(data)
    logger.debug("loaded %s matroid with %d elements from %s", matroid.kind, len(matroid), path)
    return matroid


def load_partition(path: PathLike) -> Partition:
    partition = partition_from_dict(read_json(path))
    logger.debug("loaded partition with %d parts from %s", partition.size, path)
    return partition
