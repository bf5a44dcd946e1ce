"""
Command implementations.

Each ``cmd_*`` function takes a RunConfig and returns a CommandResult; none of
them print. Exit codes: 0 valid/found, 10 refuted/nonexistent, 20 exhausted.
"""

import argparse
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from core.coloring import (
    InfeasibleColoring,
    color,
    coloring_number,
    coloring_number_density,
    predicted_coloring_number,
    optimal_coloring,
)
from core.decomp import (
    DecompParams,
    SearchOutcome,
    capacity_bounds,
    confirm_certificate,
    covering_report,
    exact_counting_crossover,
    pair_covering_capacity,
    run_spotcheck,
    scan_flat_witness,
    search_decomposition,
    theorem_threshold,
    verify_decomposition,
)
from core.errors import MatroidInputError, RefusalError
from core.flats import enumerate_flats, flat_census, flats_through_pair, pair_flat_count
from core.io import load_matroid, load_partition
from core.matroids import BinaryMatroid, MatroidOracle
from utils.config import Config
from utils.constants import ExitCodes, Limits, OutputFormats
from .output import CommandResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """
    One fully resolved invocation: flags first, then configured defaults.

    A single ``--budget`` overrides every budget the command consumes.
    """
    command: str
    input: Optional[str]
    fmt: str
    output: Optional[str]
    flat_budget: int
    transversal_budget: int
    node_budget: int
    time_limit: float
    workers: int
    seed: int
    samples: int
    b: Optional[List[int]] = None
    c: Optional[List[int]] = None
    n: Optional[List[int]] = None
    d: Optional[List[int]] = None
    dmax: Optional[int] = None
    k: Optional[int] = None
    pair: Optional[List[int]] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace, config: Config) -> "RunConfig":
        if args.format is not None:
            fmt = args.format
        elif args.command == "census":
            fmt = OutputFormats.CSV
        else:
            fmt = config.get_output_format()
        budget = args.budget
        return cls(
            command=args.command,
            input=args.input,
            fmt=fmt,
            output=args.output,
            flat_budget=budget or config.get_flat_budget(),
            transversal_budget=budget or config.get_transversal_budget(),
            node_budget=budget or config.get_search_node_budget(),
            time_limit=args.time_limit or config.get_search_time_limit(),
            workers=args.workers or config.get_workers(),
            seed=args.seed,
            samples=args.samples,
            b=args.b,
            c=args.c,
            n=args.n,
            d=args.d,
            dmax=args.dmax,
            k=args.k,
            pair=args.pair,
        )


def _single(values: Optional[List[int]], flag: str, default: Optional[int] = None) -> int:
    if values is None:
        if default is None:
            raise MatroidInputError(f"--{flag} is required")
        return default
    if len(values) != 1:
        raise MatroidInputError(f"--{flag} takes a single value here, got {values}")
    return values[0]


def _require_input(run: RunConfig) -> str:
    if run.input is None:
        raise MatroidInputError(f"{run.command} needs --input PATH")
    return run.input


def _matroid_input(run: RunConfig) -> MatroidOracle:
    if run.input is not None:
        return load_matroid(run.input)
    if run.n is not None:
        return BinaryMatroid(_single(run.n, "n"))
    raise MatroidInputError(f"{run.command} needs --input PATH or --n")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_color(run: RunConfig) -> CommandResult:
    matroid = _matroid_input(run)
    payload: Dict = {"matroid": matroid.to_spec()}

    if run.k is not None:
        result = color(matroid, run.k)
        if isinstance(result, InfeasibleColoring):
            payload.update(result.to_dict())
            return CommandResult(run.command, payload, ExitCodes.REFUTED)
        payload["k"] = run.k
        payload["feasible"] = True
        payload["classes"] = result.to_dict()["classes"]
        return CommandResult(run.command, payload)

    k = coloring_number(matroid)
    coloring = optimal_coloring(matroid)
    payload["coloring_number"] = k
    payload["classes"] = [] if coloring is None else coloring.to_dict()["classes"]
    try:
        density = coloring_number_density(matroid, workers=run.workers)
        payload["density"] = density
        payload["oracles_agree"] = density == k
    except RefusalError as e:
        logger.info("density oracle skipped: %s", e)
        payload["density"] = None
    if isinstance(matroid, BinaryMatroid):
        prediction = predicted_coloring_number(matroid.n)
        payload["prediction"] = prediction
        payload["match"] = prediction == k
    return CommandResult(run.command, payload)


def cmd_flats(run: RunConfig) -> CommandResult:
    n = _single(run.n, "n")
    d = _single(run.d, "d")
    if run.pair is not None:
        x, y = run.pair
        count = pair_flat_count(n, d)
        if count > run.flat_budget:
            raise RefusalError(f"{count} flats through the pair exceed the budget {run.flat_budget}",
                               limit=run.flat_budget, required=count)
        flats = list(flats_through_pair(n, d, x, y))
    else:
        flats = list(enumerate_flats(n, d, run.flat_budget))

    rows = [
        {"index": i, "basis": [format(r, "x") for r in f.basis.rows], "elements": sorted(f.elements)}
        for i, f in enumerate(flats)
    ]
    payload = {"n": n, "d": d, "count": len(flats), "flats": rows}
    if run.pair is not None:
        payload["pair"] = list(run.pair)
    return CommandResult(run.command, payload, rows=rows, columns=("index", "basis", "elements"))


CENSUS_COLUMNS = ("n", "d", "exact", "lower_bound", "relaxed_bound", "enumerated", "note")


def cmd_census(run: RunConfig) -> CommandResult:
    n_values = run.n or list(range(1, 7))
    d_values = run.d or list(range(1, max(n_values) + 1))
    rows = [row.to_dict() for row in flat_census(n_values, d_values, run.flat_budget)]
    return CommandResult(run.command, {"rows": rows}, rows=rows, columns=CENSUS_COLUMNS)


def cmd_verify(run: RunConfig) -> CommandResult:
    partition = load_partition(_require_input(run))
    b = _single(run.b, "b", 1)
    c = _single(run.c, "c", 1)
    report = verify_decomposition(partition, b, c, budget=run.transversal_budget, workers=run.workers)
    payload = report.to_dict()
    if report.is_valid:
        return CommandResult(run.command, payload)
    payload["replayed"] = confirm_certificate(partition, report)
    return CommandResult(run.command, payload, ExitCodes.REFUTED)


def cmd_witness(run: RunConfig) -> CommandResult:
    partition = load_partition(_require_input(run))
    b = _single(run.b, "b", 1)
    c = _single(run.c, "c", 1)
    scan = scan_flat_witness(partition, b, run.dmax, budget=run.flat_budget, workers=run.workers)
    report = scan.to_report(DecompParams.for_partition(partition, b, c))
    if report is None:
        payload = {"verdict": "no_witness", "b": b, "ranks": list(scan.ranks), "flats_scanned": scan.flats_scanned}
        return CommandResult(run.command, payload)
    payload = report.to_dict()
    payload["ranks"] = list(scan.ranks)
    payload["replayed"] = confirm_certificate(partition, report)
    return CommandResult(run.command, payload, ExitCodes.REFUTED)


COVERING_COLUMNS = ("d", "covered", "uncovered", "total", "aggregate", "literal", "relaxed", "pair_capacity")


def cmd_covering(run: RunConfig) -> CommandResult:
    partition = load_partition(_require_input(run))
    matroid = partition.matroid
    if not isinstance(matroid, BinaryMatroid):
        raise MatroidInputError(f"covering needs a partition of a binary matroid, got {matroid.kind}")
    n = matroid.n
    c = _single(run.c, "c", 1)
    k = partition.coloring_number

    rows = []
    ranks = []
    for d in run.d or range(2, n + 1):
        report = covering_report(n, d, partition, budget=run.flat_budget, workers=run.workers)
        capacity = capacity_bounds(n, d, partition.size, c, k)
        entry = report.to_dict()
        entry.update(
            aggregate=capacity.aggregate,
            literal=capacity.literal,
            relaxed=str(capacity.relaxed),
            pair_capacity=pair_covering_capacity(n, d, partition),
        )
        ranks.append(entry)
        rows.append({col: entry[col] for col in COVERING_COLUMNS})
    payload = {"n": n, "parts": partition.size, "c": c, "k": k, "ranks": ranks}
    return CommandResult(run.command, payload, rows=rows, columns=COVERING_COLUMNS)


_SEARCH_EXIT = {
    SearchOutcome.FOUND: ExitCodes.OK,
    SearchOutcome.NONEXISTENT: ExitCodes.REFUTED,
    SearchOutcome.EXHAUSTED: ExitCodes.EXHAUSTED,
}


def cmd_search(run: RunConfig) -> CommandResult:
    matroid = _matroid_input(run)
    b = _single(run.b, "b", 1)
    c = _single(run.c, "c", 1)
    result = search_decomposition(matroid, b, c, budget=run.node_budget, time_limit=run.time_limit)
    payload = {"matroid": matroid.to_spec()}
    payload.update(result.to_dict())
    return CommandResult(run.command, payload, _SEARCH_EXIT[result.outcome])


BOUNDS_COLUMNS = ("b", "c", "d", "n_max", "crossover", "statement")


def cmd_bounds(run: RunConfig) -> CommandResult:
    rows = []
    for b in run.b or [1, 2]:
        for c in run.c or [1, 2]:
            threshold = theorem_threshold(b, c)
            row = threshold.to_dict()
            limit = min(threshold.n_max + 1, Limits.CROSSOVER_SCAN)
            row["crossover"] = exact_counting_crossover(b, c, n_limit=limit)
            rows.append({col: row[col] for col in BOUNDS_COLUMNS})
    return CommandResult(run.command, {"rows": rows}, rows=rows, columns=BOUNDS_COLUMNS)


def cmd_spotcheck(run: RunConfig) -> CommandResult:
    n = _single(run.n, "n", 3)
    b = _single(run.b, "b", 1)
    c = _single(run.c, "c", 1)
    summary = run_spotcheck(n, b, c, run.samples, run.seed, budget=run.flat_budget, workers=run.workers)
    code = ExitCodes.OK if summary.violations == 0 else ExitCodes.REFUTED
    return CommandResult(run.command, summary.to_dict(), code)


COMMAND_TABLE: Dict[str, Callable[[RunConfig], CommandResult]] = {
    "color": cmd_color,
    "flats": cmd_flats,
    "census": cmd_census,
    "verify": cmd_verify,
    "witness": cmd_witness,
    "covering": cmd_covering,
    "search": cmd_search,
    "bounds": cmd_bounds,
    "spotcheck": cmd_spotcheck,
}
