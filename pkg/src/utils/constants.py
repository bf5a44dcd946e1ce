"""
Application constants: limits, default budgets, exit codes and output formats.

Defines the numeric contract shared by the library modules and the command line.
"""

from typing import Tuple


class AppInfo:
    """Application metadata."""

    NAME = "MatroidKit"
    VERSION = "0.1.0"
    ORGANIZATION = "MatroidKit"
    SETTINGS_APPLICATION = "matroidkit"


class Limits:
    """Hard caps. Operations refuse rather than silently sample above these."""

    # A vector must fit in one machine word
    MAX_WIDTH = 62
    MIN_BINARY_DIMENSION = 2

    # Span enumeration produces 2^rank - 1 vectors
    SPAN_ENUMERATION_RANK = 25

    # Exhaustive subset iteration (density oracle, axiom checks, b-colorability)
    EXHAUSTIVE_SUBSETS = 20

    # Verifier: parts per partition (each transversal must stay checkable)
    VERIFY_MAX_PARTS = 20

    # Exhaustive decomposition search
    SEARCH_MAX_GROUND = 16

    # Largest n scanned for the exact counting crossover
    CROSSOVER_SCAN = 4096


class Budgets:
    """Default budgets, overridable from settings or flags."""

    FLATS = 10 ** 7
    TRANSVERSALS = 10 ** 7
    SEARCH_NODES = 2 * 10 ** 6
    SEARCH_SECONDS = 60.0
    WORKERS = 1


class ExitCodes:
    """Process exit codes of the command line."""

    OK = 0            # valid / found
    USAGE = 2         # malformed input
    REFUTED = 10      # refuted / nonexistent
    EXHAUSTED = 20    # budget exhausted / refused


class OutputFormats:
    """Output renderers."""

    JSON = "json"
    TABLE = "table"
    CSV = "csv"

    ALL: Tuple[str, ...] = (JSON, TABLE, CSV)
    DEFAULT = JSON


# Commands exposed by the CLI, in help order
COMMANDS: Tuple[str, ...] = (
    "color",
    "flats",
    "census",
    "verify",
    "witness",
    "covering",
    "search",
    "bounds",
    "spotcheck",
)

MAX_RECENT_INPUTS = 10
