"""Experiment runner: parameter cross-products dispatched to the numerical modules."""

from __future__ import annotations

import concurrent.futures
import itertools
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from loguru import logger

from taylorlike.config.schema import Config
from taylorlike.expansion.formulas import ExpansionConfig, ExpansionError, evaluate
from taylorlike.functions.registry import (
    RegistryError,
    lookup,
    second_derivative_bounds,
)
from taylorlike.harness.experiment import Command, ExperimentConfig
from taylorlike.heat.problem import (
    PROBLEMS,
    GridConfig,
    HeatError,
    HeatProblem,
    SchemeKind,
    StudyMode,
)
from taylorlike.heat.runner import (
    convergence_study,
    run,
    space_refinements,
    step_count,
    time_refinements,
)
from taylorlike.heat.schemes import (
    max_amplification,
    time_derivative_bound_comparison,
    time_derivative_residuals,
)
from taylorlike.interpolation.bounds import verify
from taylorlike.interpolation.mesh import MeshError, build_uniform_mesh

SCHEMA_VERSION = "1.0"

EXPAND_COLUMNS = [
    "fn", "a", "b", "n", "method",
    "approx", "truth", "epsilon", "epsilon_bound", "epsilon_lower", "epsilon_upper",
    "abs_error", "abs_error_bound", "m2", "M2", "bounds_exact",
    "pass_bound", "pass_interval", "error",
]

INTERP_COLUMNS = [
    "fn", "cells", "n", "h",
    "l1_value_error", "l1_deriv_error", "w11_error",
    "classical_bound", "taylor_like_bound", "asymptotic_bound", "classical_bound_sharp",
    "m2", "M2", "sup_u2", "bounds_exact",
    "pass_classical", "pass_taylor_like", "pass_ordering", "pass_asymptotic_ordering",
    "pass_components", "error",
]

HEAT_COLUMNS = [
    "scheme", "study", "J", "lambda", "k", "h", "T", "steps",
    "max_error", "l1_error", "order_max", "order_l1",
    "max_amplification", "pass_stability", "norm_non_increasing",
    "m2", "M2", "bound_classical", "bound_new", "bound_ratio",
    "residual_classical", "residual_new", "pass_residual_classical", "pass_residual_new",
    "error",
]

COLUMNS = {
    Command.EXPAND: EXPAND_COLUMNS,
    Command.INTERP: INTERP_COLUMNS,
    Command.HEAT: HEAT_COLUMNS,
}

COMMAND_ORDER = [Command.EXPAND, Command.INTERP, Command.HEAT]

# Errors a single row may raise without aborting the experiment
ROW_ERRORS = (RegistryError, ExpansionError, MeshError, HeatError, ValueError, ArithmeticError)

Row = dict[str, Any]


def sweep_columns() -> list[str]:
    """Union schema of a sweep: command first, error last."""
    columns = ["command"]
    for command in COMMAND_ORDER:
        columns.extend(c for c in COLUMNS[command] if c not in columns and c != "error")
    columns.append("error")
    return columns


def row_failed(row: Row) -> bool:
    """A row fails when it carries an error or any pass flag is false."""
    if row.get("error"):
        return True
    return any(value is False for key, value in row.items() if key.startswith("pass_"))


@dataclass
class SweepResult:
    """Rows of one experiment, sorted by the sweep key."""

    command: Command
    columns: list[str]
    rows: list[Row] = field(default_factory=list)
    parameters: dict[str, Any] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    @property
    def failed_rows(self) -> list[Row]:
        return [row for row in self.rows if row_failed(row)]

    @property
    def passed(self) -> bool:
        return not self.failed_rows


@dataclass
class _Task:
    """One unit of work; heat studies yield several rows."""

    command: Command
    key: tuple
    inputs: Row
    compute: Callable[[], list[Row]]

    def execute(self) -> list[Row]:
        try:
            rows = self.compute()
        except ROW_ERRORS as e:
            logger.warning(f"{self.command.value} row {self.inputs} failed: {e}")
            rows = [{**self.inputs, "error": str(e)}]
        return [{**row, "command": self.command.value} for row in rows]


# ── Expansion rows ────────────────────────────────────────────────


def _expand_row(fn: str, a: float, b: float, n: int, method: str, cfg: ExperimentConfig, settings: Config) -> Row:
    spec = lookup(fn)
    bounds = second_derivative_bounds(spec, a, b, scan_points=settings.registry.scan_points)
    if cfg.safe_mode:
        bounds = bounds.widened(settings.registry.safe_mode_widening)
    report = evaluate(spec, ExpansionConfig(a=a, b=b, n=n), method=method, bounds=bounds)
    return {
        "fn": fn, "a": a, "b": b, "n": n, "method": method,
        "approx": report.approx,
        "truth": report.truth,
        "epsilon": report.epsilon,
        "epsilon_bound": report.epsilon_bound,
        "epsilon_lower": report.epsilon_lower,
        "epsilon_upper": report.epsilon_upper,
        "abs_error": report.abs_error,
        "abs_error_bound": report.abs_error_bound,
        "m2": bounds.m2,
        "M2": bounds.M2,
        "bounds_exact": bounds.exact,
        "pass_bound": abs(report.epsilon) <= report.epsilon_bound + cfg.slack,
        "pass_interval": report.epsilon_lower - cfg.slack <= report.epsilon <= report.epsilon_upper + cfg.slack,
    }


def _expand_tasks(cfg: ExperimentConfig, settings: Config) -> list[_Task]:
    tasks = []
    for fn, (a, b), n, method in itertools.product(cfg.functions, cfg.expand_intervals, cfg.n, cfg.methods):
        tasks.append(
            _Task(
                command=Command.EXPAND,
                key=(fn, a, b, n, method),
                inputs={"fn": fn, "a": a, "b": b, "n": n, "method": method},
                compute=lambda fn=fn, a=a, b=b, n=n, method=method: [
                    _expand_row(fn, a, b, n, method, cfg, settings)
                ],
            )
        )
    return tasks


# ── Interpolation rows ────────────────────────────────────────────


def _interp_row(fn: str, cells: int, n: int, cfg: ExperimentConfig, settings: Config) -> Row:
    spec = lookup(fn)
    bounds = second_derivative_bounds(spec, 0.0, 1.0, scan_points=settings.registry.scan_points)
    if cfg.safe_mode:
        bounds = bounds.widened(settings.registry.safe_mode_widening)
    report = verify(
        spec,
        build_uniform_mesh(cells),
        n=n,
        quad_points=cfg.quad_points,
        bounds=bounds,
        slack=cfg.slack,
        sign_samples=settings.interpolation.sign_samples,
    )
    return {
        "fn": fn, "cells": cells, "n": n, "h": report.h,
        "l1_value_error": report.l1_value_error,
        "l1_deriv_error": report.l1_deriv_error,
        "w11_error": report.w11_error,
        "classical_bound": report.classical_bound,
        "taylor_like_bound": report.taylor_like_bound,
        "asymptotic_bound": report.asymptotic_bound,
        "classical_bound_sharp": report.classical_bound_sharp,
        "m2": bounds.m2,
        "M2": bounds.M2,
        "sup_u2": report.sup_u2,
        "bounds_exact": bounds.exact,
        "pass_classical": report.pass_classical,
        "pass_taylor_like": report.pass_taylor_like,
        "pass_ordering": report.pass_ordering,
        "pass_asymptotic_ordering": report.pass_asymptotic_ordering,
        "pass_components": report.pass_components,
    }


def _interp_tasks(cfg: ExperimentConfig, settings: Config) -> list[_Task]:
    tasks = []
    for fn, cells, n in itertools.product(cfg.functions, cfg.cells, cfg.n):
        tasks.append(
            _Task(
                command=Command.INTERP,
                key=(fn, cells, n),
                inputs={"fn": fn, "cells": cells, "n": n},
                compute=lambda fn=fn, cells=cells, n=n: [_interp_row(fn, cells, n, cfg, settings)],
            )
        )
    return tasks


# ── Heat rows ─────────────────────────────────────────────────────


def _grid_columns(problem: HeatProblem, grid: GridConfig, scheme: SchemeKind, cfg: ExperimentConfig, settings: Config) -> Row:
    """Stability and time-derivative columns of one grid."""
    amplification = max_amplification(scheme, grid.lam, samples=settings.heat.theta_samples)
    row: Row = {"max_amplification": amplification, "pass_stability": amplification <= 1.0}
    if problem.utt_bounds is not None:
        m2, M2 = problem.utt_bounds
        comparison = time_derivative_bound_comparison(grid.k, m2, M2)
        row.update(
            m2=m2,
            M2=M2,
            bound_classical=comparison.bound_classical,
            bound_new=comparison.bound_new,
            bound_ratio=comparison.ratio,
        )
        if problem.exact is not None and problem.exact_t is not None:
            residuals = time_derivative_residuals(problem.exact, problem.exact_t, grid.nodes, 0.0, grid.k)
            row.update(
                residual_classical=residuals.classical,
                residual_new=residuals.taylor_like,
                pass_residual_classical=residuals.classical <= comparison.bound_classical + cfg.slack,
                pass_residual_new=residuals.taylor_like <= comparison.bound_new + cfg.slack,
            )
    return row


def _heat_run_rows(problem: HeatProblem, grid: GridConfig, scheme: SchemeKind, cfg: ExperimentConfig, settings: Config) -> list[Row]:
    result = run(problem, grid, scheme, max_steps=settings.heat.max_steps)
    row: Row = {
        "scheme": scheme.value, "study": "none", "J": grid.J, "lambda": grid.lam,
        "k": grid.k, "h": grid.h, "T": problem.T, "steps": result.steps,
        "max_error": result.max_error,
        "l1_error": result.l1_error,
        "norm_non_increasing": result.norms_non_increasing,
    }
    row.update(_grid_columns(problem, grid, scheme, cfg, settings))
    return [row]


def _heat_study_rows(problem: HeatProblem, grids: list[GridConfig], scheme: SchemeKind, mode: StudyMode, cfg: ExperimentConfig, settings: Config) -> list[Row]:
    study = convergence_study(problem, scheme, grids, mode, max_steps=settings.heat.max_steps)
    rows = []
    for grid, entry in zip(grids, study.rows):
        row: Row = {
            "scheme": scheme.value, "study": mode.value, "J": grid.J, "lambda": grid.lam,
            "k": grid.k, "h": grid.h, "T": problem.T, "steps": step_count(problem.T, grid.k),
            "max_error": entry.max_error,
            "l1_error": entry.l1_error,
            "order_max": entry.order_max,
            "order_l1": entry.order_l1,
        }
        row.update(_grid_columns(problem, grid, scheme, cfg, settings))
        rows.append(row)
    return rows


def _heat_tasks(cfg: ExperimentConfig, settings: Config) -> list[_Task]:
    problem = PROBLEMS[cfg.problem](cfg.T)
    tasks = []
    for scheme in map(SchemeKind, cfg.schemes):
        if cfg.study == "space":
            for lam in cfg.lambdas:
                inputs = {"scheme": scheme.value, "study": "space", "lambda": lam}
                tasks.append(
                    _Task(
                        command=Command.HEAT,
                        key=(scheme.value, "space", lam, 0),
                        inputs=inputs,
                        compute=lambda scheme=scheme, lam=lam: _heat_study_rows(
                            problem, space_refinements(cfg.J, lam), scheme, StudyMode.SPACE, cfg, settings
                        ),
                    )
                )
        elif cfg.study == "time":
            for J in cfg.J:
                inputs = {"scheme": scheme.value, "study": "time", "J": J}
                tasks.append(
                    _Task(
                        command=Command.HEAT,
                        key=(scheme.value, "time", float(J), 0),
                        inputs=inputs,
                        compute=lambda scheme=scheme, J=J: _heat_study_rows(
                            problem, time_refinements(J, cfg.k), scheme, StudyMode.TIME, cfg, settings
                        ),
                    )
                )
        else:
            steps = cfg.k if cfg.k is not None else cfg.lambdas
            for J, value in itertools.product(cfg.J, steps):
                inputs = {"scheme": scheme.value, "study": "none", "J": J}
                inputs["k" if cfg.k is not None else "lambda"] = value
                tasks.append(
                    _Task(
                        command=Command.HEAT,
                        key=(scheme.value, "none", float(J), value),
                        inputs=inputs,
                        compute=lambda scheme=scheme, J=J, value=value: _heat_run_rows(
                            problem,
                            GridConfig(J=J, k=value) if cfg.k is not None else GridConfig.from_lambda(J, value),
                            scheme,
                            cfg,
                            settings,
                        ),
                    )
                )
    return tasks


# ── Dispatch ──────────────────────────────────────────────────────


def _tasks(cfg: ExperimentConfig, settings: Config) -> list[_Task]:
    builders = {
        Command.EXPAND: _expand_tasks,
        Command.INTERP: _interp_tasks,
        Command.HEAT: _heat_tasks,
    }
    if cfg.command is Command.SWEEP:
        return [task for command in COMMAND_ORDER for task in builders[command](cfg, settings)]
    return builders[cfg.command](cfg, settings)


def run_experiment(cfg: ExperimentConfig, settings: Config | None = None) -> SweepResult:
    """
    Compute one row per parameter combination.

    Module errors are recorded in the row's ``error`` column. Rows are computed
    on a thread pool when ``cfg.workers > 1``; the returned rows are always in
    sweep-key order.
    """
    settings = settings or Config()
    tasks = _tasks(cfg, settings)

    if cfg.workers > 1 and len(tasks) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            computed = list(pool.map(_Task.execute, tasks))
    else:
        computed = [task.execute() for task in tasks]

    ordered = sorted(
        zip(tasks, computed),
        key=lambda pair: (COMMAND_ORDER.index(pair[0].command), pair[0].key),
    )
    rows = [row for _, task_rows in ordered for row in task_rows]

    if cfg.command is Command.SWEEP:
        columns = sweep_columns()
    else:
        columns = COLUMNS[cfg.command]
        for row in rows:
            row.pop("command", None)

    result = SweepResult(command=cfg.command, columns=columns, rows=rows, parameters=cfg.params)
    logger.info(
        f"{cfg.command.value} experiment: {len(rows)} rows, {len(result.failed_rows)} failed"
    )
    return result
