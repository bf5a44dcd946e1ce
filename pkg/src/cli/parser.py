"""
Argument parsing for the matroidkit command line.
"""

import argparse
import re
from typing import List, Optional

from utils.constants import AppInfo, COMMANDS, OutputFormats

_RANGE = re.compile(r"^(\d+)(?:-(\d+))?$")

COMMAND_HELP = {
    "color": "coloring number and an optimal coloring of a matroid",
    "flats": "enumerate rank-d flats of the binary matroid",
    "census": "exact flat counts, bounds and enumeration cross-check",
    "verify": "decide whether a partition is a (b,c)-decomposition",
    "witness": "search a partition for an uncovered, non-b-colorable flat",
    "covering": "covered/uncovered flats and covering capacity of a partition",
    "search": "exhaustive search for a (b,c)-decomposition",
    "bounds": "dimension thresholds n_max for (b,c) ranges",
    "spotcheck": "seeded random-partition checks of the decomposition engine",
}


def int_list(text: str) -> List[int]:
    """
    Parse ``"4"``, ``"2-6"`` or ``"1,3,5"`` (ranges allowed inside lists).
    """
    values: List[int] = []
    for piece in text.split(","):
        match = _RANGE.match(piece.strip())
        if match is None:
            raise argparse.ArgumentTypeError(f"not an integer, range or list: {text!r}")
        lo = int(match.group(1))
        hi = int(match.group(2) or lo)
        if hi < lo:
            raise argparse.ArgumentTypeError(f"empty range in {text!r}")
        values.extend(range(lo, hi + 1))
    return values


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {text!r}")
    return value


def element_pair(text: str) -> List[int]:
    """
    Parse ``"X,Y"``. Ids are decimal unless prefixed (``0x``, ``0b``), unlike
    JSON input files, where string ids are always hex.
    """
    pieces = text.split(",")
    if len(pieces) != 2:
        raise argparse.ArgumentTypeError(f"expected two element ids X,Y, got {text!r}")
    try:
        return [int(p, 0) for p in pieces]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not element ids: {text!r}") from None


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="PATH", help="matroid spec or partition file (JSON)")
    common.add_argument("--format", choices=OutputFormats.ALL, default=None, help="output format")
    common.add_argument("--output", metavar="PATH", help="write the result here (.xlsx for a spreadsheet)")
    common.add_argument("--budget", type=positive_int, default=None,
                        help="flat/transversal budget, or node budget for search")
    common.add_argument("--workers", type=positive_int, default=None, help="worker threads")
    common.add_argument("--seed", type=int, default=0, help="sampling seed (spotcheck only)")
    common.add_argument("--b", type=int_list, default=None, help="colors per transversal (range for bounds)")
    common.add_argument("--c", type=int_list, default=None, help="size multiplier (range for bounds)")
    common.add_argument("--n", type=int_list, default=None, help="binary dimension (range for census)")
    common.add_argument("--d", type=int_list, default=None, help="flat rank (range for census/covering)")
    common.add_argument("--dmax", type=positive_int, default=None, help="largest flat rank to scan")
    common.add_argument("--k", type=positive_int, default=None, help="number of colors to try")
    common.add_argument("--pair", type=element_pair, default=None, metavar="X,Y",
                        help="only flats through these two elements (decimal, or 0x-prefixed hex; "
                             "JSON files spell string ids in hex)")
    common.add_argument("--samples", type=positive_int, default=100, help="random partitions to draw")
    common.add_argument("--time-limit", type=positive_float, default=None, help="search time limit in seconds")
    common.add_argument("--config", metavar="INI", default=None, help="settings file instead of the user profile")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog=AppInfo.SETTINGS_APPLICATION,
        description="Exact matroid coloring, binary-matroid flats and (b,c)-decompositions.",
    )
    parser.add_argument("--version", action="version", version=f"{AppInfo.NAME} {AppInfo.VERSION}")
    common = _common_options()
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=COMMAND_HELP[name], description=COMMAND_HELP[name])
    return parser


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
