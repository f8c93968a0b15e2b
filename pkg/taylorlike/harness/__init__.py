"""Experiment configuration, runner and report emission."""

from taylorlike.harness.experiment import (
    Command,
    EmitError,
    ExperimentConfig,
    ExperimentError,
    OutputFormat,
    UsageError,
)
from taylorlike.harness.report import emit, render, write_gnuplot
from taylorlike.harness.runner import SCHEMA_VERSION, SweepResult, row_failed, run_experiment

__all__ = [
    "SCHEMA_VERSION",
    "Command",
    "EmitError",
    "ExperimentConfig",
    "ExperimentError",
    "OutputFormat",
    "SweepResult",
    "UsageError",
    "emit",
    "render",
    "row_failed",
    "run_experiment",
    "write_gnuplot",
]
