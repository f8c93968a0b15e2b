"""CSV/JSON report emission and companion gnuplot scripts."""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any

from loguru import logger

from taylorlike.harness.experiment import Command, EmitError, OutputFormat
from taylorlike.harness.runner import SweepResult
from taylorlike.utils.helpers import ensure_dir, format_number


def format_cell(value: Any) -> str:
    """CSV cell text: reals with 17 significant digits, booleans as true/false, None empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    return str(value)


def render_csv(result: SweepResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(result.columns)
    for row in result.rows:
        writer.writerow([format_cell(row.get(column)) for column in result.columns])
    return buffer.getvalue()


def render_json(result: SweepResult) -> str:
    document = {
        "schema_version": result.schema_version,
        "command": result.command.value,
        "parameters": result.parameters,
        "columns": result.columns,
        "rows": [{column: row.get(column) for column in result.columns} for row in result.rows],
    }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def render(result: SweepResult, fmt: OutputFormat | str) -> str:
    if OutputFormat(fmt) is OutputFormat.JSON:
        return render_json(result)
    return render_csv(result)


def emit(result: SweepResult, fmt: OutputFormat | str, path: str | Path = "-") -> None:
    """
    Write the report to path, or to standard output when path is "-".

    Raises:
        EmitError: If the destination cannot be written.
    """
    text = render(result, fmt)
    if str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    try:
        ensure_dir(target.parent)
        with open(target, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise EmitError(f"cannot write report to {target}: {e}") from e
    logger.debug(f"Wrote {len(result.rows)} rows to {target}")


# ── gnuplot ───────────────────────────────────────────────────────

_PLOTS = {
    Command.EXPAND: (
        "n", "remainder",
        ['"{data}" using "n":(abs(column("epsilon"))) with linespoints title "|epsilon|"',
         '"{data}" using "n":"epsilon_bound" with lines title "bound"'],
    ),
    Command.INTERP: (
        "h", "W^{1,1} error",
        ['"{data}" using "h":"w11_error" with linespoints title "measured"',
         '"{data}" using "h":"taylor_like_bound" with lines title "Taylor-like bound"',
         '"{data}" using "h":"classical_bound" with lines title "classical bound"'],
    ),
    Command.HEAT: (
        "h", "max-norm error at T",
        ['"{data}" using "h":"max_error" with linespoints title "max error"'],
    ),
}


def gnuplot_script(result: SweepResult, data_path: Path) -> str:
    command = Command.INTERP if result.command is Command.SWEEP else result.command
    xlabel, ylabel, plots = _PLOTS[command]
    lines = [
        f"# {result.command.value} report, schema {result.schema_version}",
        'set datafile separator ","',
        "set datafile missing \"\"",
        "set logscale xy",
        f'set xlabel "{xlabel}"',
        f'set ylabel "{ylabel}"',
        "set key top left",
        "plot " + ", \\\n     ".join(plot.format(data=data_path.name) for plot in plots),
    ]
    return "\n".join(lines) + "\n"


def write_gnuplot(result: SweepResult, data_path: str | Path) -> Path:
    """Write ``<data_path>.gp`` plotting the CSV report next to it."""
    data_path = Path(data_path)
    script = data_path.with_name(data_path.name + ".gp")
    try:
        script.write_text(gnuplot_script(result, data_path), encoding="utf-8")
    except OSError as e:
        raise EmitError(f"cannot write gnuplot script to {script}: {e}") from e
    return script
