"""
Rendering of command results.

JSON is the machine format; tables and CSV are derived views of the same
payload. Spreadsheet export writes the tabular view with openpyxl.
"""

import csv
import io
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from utils.constants import ExitCodes, OutputFormats

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """
    Outcome of one command.

    Attributes:
        command: Command name
        payload: JSON-ready result
        exit_code: Process exit code
        rows: Tabular view (census, bounds, ...) or None for record-shaped results
        columns: Column order of ``rows``
    """
    command: str
    payload: Dict[str, Any]
    exit_code: int = ExitCodes.OK
    rows: Optional[List[Dict[str, Any]]] = None
    columns: Optional[Sequence[str]] = None

    def table_rows(self) -> List[Dict[str, Any]]:
        if self.rows is not None:
            return self.rows
        return [{"field": key, "value": _cell(value)} for key, value in self.payload.items()]

    def table_columns(self) -> List[str]:
        if self.rows is not None:
            if self.columns is not None:
                return list(self.columns)
            return list(self.rows[0]) if self.rows else []
        return ["field", "value"]


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def render_json(result: CommandResult) -> str:
    return json.dumps(result.payload, indent=2, ensure_ascii=False) + "\n"


def render_csv(result: CommandResult) -> str:
    buffer = io.StringIO()
    columns = result.table_columns()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in result.table_rows():
        writer.writerow([_cell(row.get(col)) for col in columns])
    return buffer.getvalue()


def render_table(result: CommandResult) -> str:
    """Column-aligned plain text."""
    columns = result.table_columns()
    cells = [[_cell(row.get(col)) for col in columns] for row in result.table_rows()]
    widths = [max([len(col)] + [len(r[i]) for r in cells]) for i, col in enumerate(columns)]
    lines = ["  ".join(col.ljust(w) for col, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in cells:
        lines.append("  ".join(value.ljust(w) for value, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


RENDERERS = {
    OutputFormats.JSON: render_json,
    OutputFormats.TABLE: render_table,
    OutputFormats.CSV: render_csv,
}


def render(result: CommandResult, fmt: str) -> str:
    try:
        return RENDERERS[fmt](result)
    except KeyError:
        raise ValueError(f"unknown output format {fmt!r}") from None


def export_to_excel(result: CommandResult, output_path: str) -> None:
    """Write the tabular view of ``result`` to an .xlsx workbook."""
    from openpyxl import Workbook

    wb = Workbook()
    ws = wb.active
    ws.title = result.command

    columns = result.table_columns()
    for col, name in enumerate(columns, start=1):
        ws.cell(1, col, name)
    for row_index, row in enumerate(result.table_rows(), start=2):
        for col, name in enumerate(columns, start=1):
            value = row.get(name)
            if isinstance(value, int) and not isinstance(value, bool) and abs(value) >= 2 ** 53:
                value = str(value)  # beyond spreadsheet float precision
            elif isinstance(value, (dict, list)) or value is None:
                value = _cell(value)
            ws.cell(row_index, col, value)

    wb.save(output_path)
    logger.info("wrote %d rows to %s", len(result.table_rows()), output_path)


def write_result(result: CommandResult, fmt: str, output_path: Optional[str], stream) -> None:
    """
    Emit ``result`` to ``stream`` or to ``output_path``.

    An ``.xlsx`` path selects the spreadsheet export; any other path receives
    the rendered text.
    """
    if output_path is None:
        stream.write(render(result, fmt))
        return
    path = Path(output_path)
    if path.suffix.lower() == ".xlsx":
        export_to_excel(result, str(path))
        return
    path.write_text(render(result, fmt), encoding="utf-8")
    logger.info("wrote %s output to %s", fmt, path)
