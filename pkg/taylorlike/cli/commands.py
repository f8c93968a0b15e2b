"""CLI commands for taylorlike."""

import sys
from pathlib import Path
from typing import Any, Optional

import click
import typer
from loguru import logger
from rich.console import Console
from rich.table import Table

from taylorlike import __logo__, __version__
from taylorlike.harness.experiment import Command, EmitError, ExperimentConfig, UsageError

app = typer.Typer(
    name="taylorlike",
    help=f"{__logo__} taylorlike - Taylor-like expansions, interpolation bounds and heat schemes",
    no_args_is_help=True,
)

# Reports may go to stdout, so everything human-readable goes to stderr
console = Console(stderr=True)

EXIT_USAGE = 2
EXIT_FAILED_ROWS = 3
EXIT_IO = 4


def version_callback(value: bool):
    if value:
        console.print(f"{__logo__} taylorlike v{__version__}")
        raise typer.Exit()


def _state(ctx: typer.Context) -> dict[str, Any]:
    ctx.ensure_object(dict)
    return ctx.obj


def _configure_logging(verbose: bool, level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else level.upper())


@app.callback()
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        None, "--version", "-V", callback=version_callback, is_eager=True
    ),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr"),
    config: Optional[Path] = typer.Option(None, "--config", help="Path to config.json"),
):
    """taylorlike - Taylor-like expansions and the error bounds they sharpen."""
    from taylorlike.config.loader import load_config

    state = _state(ctx)
    settings = load_config(config)
    state["settings"] = settings
    if not state.get("parse_only"):
        _configure_logging(verbose, settings.output.log_level)


# ============================================================================
# Experiments
# ============================================================================


def _fail(message: str, code: int) -> None:
    console.print(f"[red]Error: {message}[/red]")
    raise typer.Exit(code)


def _print_summary(result) -> None:
    failed = len(result.failed_rows)
    table = Table(title=f"{__logo__} {result.command.value}")
    table.add_column("Rows", justify="right")
    table.add_column("Passed", justify="right", style="green")
    table.add_column("Failed", justify="right", style="red" if failed else "dim")
    table.add_row(str(len(result.rows)), str(len(result.rows) - failed), str(failed))
    console.print(table)


def _execute(ctx: typer.Context, command: Command, options: dict[str, Any]) -> None:
    """Validate options, then (unless only parsing) run, emit and set the exit status."""
    from taylorlike.harness.report import emit, write_gnuplot
    from taylorlike.harness.runner import run_experiment

    state = _state(ctx)
    settings = state.get("settings")
    try:
        cfg = ExperimentConfig.from_options(command, options, settings)
    except UsageError as e:
        if state.get("parse_only"):
            raise
        _fail(str(e), EXIT_USAGE)

    if state.get("parse_only"):
        state["config"] = cfg
        return

    result = run_experiment(cfg, settings)
    try:
        emit(result, cfg.format, cfg.out)
        if cfg.gnuplot:
            script = write_gnuplot(result, cfg.out)
            console.print(f"[green]✓[/green] Wrote gnuplot script {script}")
    except EmitError as e:
        _fail(str(e), EXIT_IO)

    _print_summary(result)
    if cfg.strict and result.failed_rows:
        raise typer.Exit(EXIT_FAILED_ROWS)


def _shared(
    out: Optional[str],
    format: Optional[str],
    strict: bool,
    safe_mode: bool,
    quad_points: Optional[int],
    workers: Optional[int],
    slack: Optional[float],
    gnuplot: bool,
) -> dict[str, Any]:
    return {
        "out": out,
        "format": format,
        "strict": strict,
        "safe_mode": safe_mode,
        "quad_points": quad_points,
        "workers": workers,
        "slack": slack,
        "gnuplot": gnuplot,
    }


OutOption = typer.Option(None, "--out", "-o", help="Output path, or - for stdout")
FormatOption = typer.Option(None, "--format", "-f", help="csv or json")
StrictOption = typer.Option(False, "--strict", help="Exit with status 3 if any row fails")
SafeModeOption = typer.Option(False, "--safe-mode", help="Widen sampled f'' bounds")
QuadPointsOption = typer.Option(None, "--quad-points", help="Gauss-Legendre nodes per piece")
WorkersOption = typer.Option(None, "--workers", help="Rows computed in parallel")
SlackOption = typer.Option(None, "--slack", help="Absolute slack of the pass flags")
GnuplotOption = typer.Option(False, "--gnuplot", help="Also write <out>.gp")


@app.command()
def expand(
    ctx: typer.Context,
    fn: Optional[str] = typer.Option(None, "--fn", help="Function id(s), comma-separated"),
    a: Optional[float] = typer.Option(None, "--a", help="Expansion point"),
    b: Optional[float] = typer.Option(None, "--b", help="Evaluation point"),
    n: Optional[str] = typer.Option(None, "--n", help="Subinterval counts, e.g. 1,2,4"),
    method: Optional[str] = typer.Option(None, "--method", help="classical|taylorlike|both"),
    out: Optional[str] = OutOption,
    format: Optional[str] = FormatOption,
    strict: bool = StrictOption,
    safe_mode: bool = SafeModeOption,
    quad_points: Optional[int] = QuadPointsOption,
    workers: Optional[int] = WorkersOption,
    slack: Optional[float] = SlackOption,
    gnuplot: bool = GnuplotOption,
):
    """Expand f(b) around a and check the remainder against its bound."""
    options = {"fn": fn, "a": a, "b": b, "n": n, "method": method}
    options.update(_shared(out, format, strict, safe_mode, quad_points, workers, slack, gnuplot))
    _execute(ctx, Command.EXPAND, options)


@app.command()
def interp(
    ctx: typer.Context,
    fn: Optional[str] = typer.Option(None, "--fn", help="Function id(s), comma-separated"),
    cells: Optional[str] = typer.Option(None, "--cells", help="Uniform mesh cell counts, e.g. 8,16,32"),
    n: Optional[str] = typer.Option(None, "--n", help="n of the Taylor-like estimate"),
    out: Optional[str] = OutOption,
    format: Optional[str] = FormatOption,
    strict: bool = StrictOption,
    safe_mode: bool = SafeModeOption,
    quad_points: Optional[int] = QuadPointsOption,
    workers: Optional[int] = WorkersOption,
    slack: Optional[float] = SlackOption,
    gnuplot: bool = GnuplotOption,
):
    """Measure P1 interpolation errors in W^{1,1} against the bounds."""
    options = {"fn": fn, "cells": cells, "n": n}
    options.update(_shared(out, format, strict, safe_mode, quad_points, workers, slack, gnuplot))
    _execute(ctx, Command.INTERP, options)


@app.command()
def heat(
    ctx: typer.Context,
    scheme: Optional[str] = typer.Option(None, "--scheme", help="fd1|fd2|both"),
    J: Optional[str] = typer.Option(None, "--J", help="Interior node counts"),
    lam: Optional[str] = typer.Option(None, "--lambda", help="Mesh ratios k/h^2"),
    k: Optional[str] = typer.Option(None, "--k", help="Time steps (instead of --lambda)"),
    T: Optional[float] = typer.Option(None, "--T", help="Final time"),
    study: Optional[str] = typer.Option(None, "--study", help="space|time|none"),
    problem: Optional[str] = typer.Option(None, "--problem", help="sine|zero"),
    out: Optional[str] = OutOption,
    format: Optional[str] = FormatOption,
    strict: bool = StrictOption,
    safe_mode: bool = SafeModeOption,
    quad_points: Optional[int] = QuadPointsOption,
    workers: Optional[int] = WorkersOption,
    slack: Optional[float] = SlackOption,
    gnuplot: bool = GnuplotOption,
):
    """Run FD1/FD2 on the heat equation and report errors, stability and orders."""
    options = {"scheme": scheme, "J": J, "lam": lam, "k": k, "T": T, "study": study, "problem": problem}
    options.update(_shared(out, format, strict, safe_mode, quad_points, workers, slack, gnuplot))
    _execute(ctx, Command.HEAT, options)


@app.command()
def sweep(
    ctx: typer.Context,
    fn: Optional[str] = typer.Option(None, "--fn", help="Function ids (default: all)"),
    intervals: Optional[str] = typer.Option(None, "--intervals", help="Expansion intervals, e.g. 0:1,0.25:1"),
    n: Optional[str] = typer.Option(None, "--n", help="Subinterval counts"),
    method: Optional[str] = typer.Option(None, "--method", help="classical|taylorlike|both"),
    cells: Optional[str] = typer.Option(None, "--cells", help="Mesh cell counts"),
    scheme: Optional[str] = typer.Option(None, "--scheme", help="fd1|fd2|both"),
    J: Optional[str] = typer.Option(None, "--J", help="Interior node counts"),
    lam: Optional[str] = typer.Option(None, "--lambda", help="Mesh ratios k/h^2"),
    T: Optional[float] = typer.Option(None, "--T", help="Final time"),
    out: Optional[str] = OutOption,
    format: Optional[str] = FormatOption,
    strict: bool = StrictOption,
    safe_mode: bool = SafeModeOption,
    quad_points: Optional[int] = QuadPointsOption,
    workers: Optional[int] = WorkersOption,
    slack: Optional[float] = SlackOption,
    gnuplot: bool = GnuplotOption,
):
    """Run the expand, interp and heat suites in one report."""
    options = {
        "fn": fn, "intervals": intervals, "n": n, "method": method, "cells": cells,
        "scheme": scheme, "J": J, "lam": lam, "T": T,
    }
    options.update(_shared(out, format, strict, safe_mode, quad_points, workers, slack, gnuplot))
    _execute(ctx, Command.SWEEP, options)


def parse_cli(argv: list[str]) -> ExperimentConfig:
    """
    Parse and validate an argument vector without running anything.

    Raises:
        UsageError: For unknown subcommands or flags, missing or out-of-range values.
    """
    state: dict[str, Any] = {"parse_only": True}
    command = typer.main.get_command(app)
    try:
        command.main(args=list(argv), prog_name="taylorlike", standalone_mode=False, obj=state)
    except click.UsageError as e:
        raise UsageError(e.format_message()) from None
    except click.exceptions.Exit:
        pass
    config = state.get("config")
    if config is None:
        raise UsageError("missing subcommand (expected expand|interp|heat|sweep)")
    return config


# ============================================================================
# Registry / Config
# ============================================================================


@app.command()
def functions():
    """List the registered test functions."""
    from taylorlike.functions.registry import FUNCTIONS

    table = Table(title="Test functions")
    table.add_column("ID", style="cyan")
    table.add_column("f(x)")
    table.add_column("Aliases")
    table.add_column("Domain")
    table.add_column("f'' bounds")

    for spec in FUNCTIONS.all():
        lo, hi = spec.domain
        bounds = "[green]exact[/green]" if spec.has_exact_bounds else "[yellow]sampled[/yellow]"
        table.add_row(spec.id, spec.description, ", ".join(spec.aliases), f"[{lo:g}, {hi:g}]", bounds)

    console.print(table)


@app.command("config")
def config_command(
    ctx: typer.Context,
    write: bool = typer.Option(False, "--write", help="Save the effective configuration"),
):
    """Show the effective configuration."""
    from taylorlike.config.loader import get_config_path, save_config
    from taylorlike.config.schema import Config

    settings = _state(ctx).get("settings") or Config()
    table = Table(title=f"{__logo__} configuration")
    table.add_column("Section", style="cyan")
    table.add_column("Key")
    table.add_column("Value")
    for section, values in settings.model_dump(mode="json").items():
        for key, value in values.items():
            table.add_row(section, key, str(value))
    console.print(table)

    if write:
        path = save_config(settings)
        console.print(f"[green]✓[/green] Saved config to {path}")
    else:
        path = get_config_path()
        status = "[green]✓[/green]" if path.exists() else "[dim]not found[/dim]"
        console.print(f"Config: {path} {status}")


if __name__ == "__main__":
    app()
