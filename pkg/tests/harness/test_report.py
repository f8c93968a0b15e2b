"""Tests for CSV/JSON emission and gnuplot scripts."""

import json

import pytest

from taylorlike.harness import (
    SCHEMA_VERSION,
    Command,
    EmitError,
    ExperimentConfig,
    OutputFormat,
    SweepResult,
    emit,
    render,
    run_experiment,
    write_gnuplot,
)
from taylorlike.harness.report import format_cell, gnuplot_script, render_csv, render_json
from taylorlike.harness.runner import EXPAND_COLUMNS


@pytest.fixture
def expand_result(settings):
    cfg = ExperimentConfig.from_options("expand", {"fn": "poly3", "n": "1"})
    return run_experiment(cfg, settings)


def test_format_cell():
    assert format_cell(0.1) == "1.0000000000000001e-01"
    assert format_cell(-0.5) == "-5.0000000000000000e-01"
    assert format_cell(True) == "true"
    assert format_cell(False) == "false"
    assert format_cell(None) == ""
    assert format_cell(32) == "32"
    assert format_cell("poly3") == "poly3"


def test_empty_result_is_header_only():
    result = SweepResult(command=Command.EXPAND, columns=EXPAND_COLUMNS)
    assert render_csv(result) == ",".join(EXPAND_COLUMNS) + "\n"


def test_one_row_gives_two_lines(expand_result):
    lines = render_csv(expand_result).splitlines()
    assert len(lines) == 2
    header, row = lines
    assert header.split(",") == EXPAND_COLUMNS
    cells = dict(zip(EXPAND_COLUMNS, row.split(",")))
    assert cells["fn"] == "poly3"
    assert cells["approx"] == "1.5000000000000000e+00"
    assert cells["epsilon_bound"] == "7.5000000000000000e-01"
    assert cells["pass_bound"] == "true"
    assert cells["error"] == ""


def test_json_document(expand_result):
    document = json.loads(render_json(expand_result))
    assert document["schema_version"] == SCHEMA_VERSION
    assert document["command"] == "expand"
    assert document["columns"] == EXPAND_COLUMNS
    assert document["parameters"]["fn"] == ["poly3"]
    assert document["parameters"]["n"] == [1]
    (row,) = document["rows"]
    assert list(row) == EXPAND_COLUMNS
    assert row["epsilon"] == -0.5
    assert row["error"] is None


def test_render_dispatches_on_format(expand_result):
    assert render(expand_result, OutputFormat.JSON) == render_json(expand_result)
    assert render(expand_result, "csv") == render_csv(expand_result)


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_same_config_gives_identical_bytes(tmp_path, settings, fmt):
    paths = []
    for name in ("first", "second"):
        cfg = ExperimentConfig.from_options("interp", {"fn": "sine,bump", "cells": "4,8", "n": "1,4"})
        path = tmp_path / f"{name}.{fmt}"
        emit(run_experiment(cfg, settings), fmt, path)
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_emit_to_stdout(capsys, expand_result):
    emit(expand_result, "csv", "-")
    assert capsys.readouterr().out == render_csv(expand_result)


def test_emit_creates_parent_directories(tmp_path, expand_result):
    path = tmp_path / "reports" / "expand.csv"
    emit(expand_result, "csv", path)
    assert path.read_text(encoding="utf-8") == render_csv(expand_result)


def test_emit_io_failure(tmp_path, expand_result):
    blocker = tmp_path / "blocker"
    blocker.write_text("not a directory")
    with pytest.raises(EmitError, match="cannot write report"):
        emit(expand_result, "csv", blocker / "report.csv")


def test_gnuplot_script(tmp_path, expand_result):
    data = tmp_path / "expand.csv"
    emit(expand_result, "csv", data)
    script = write_gnuplot(expand_result, data)
    assert script == tmp_path / "expand.csv.gp"
    text = script.read_text(encoding="utf-8")
    assert 'set datafile separator ","' in text
    assert '"expand.csv" using "n":"epsilon_bound"' in text


def test_gnuplot_heat_plots_error_against_h(tmp_path, settings):
    cfg = ExperimentConfig.from_options("heat", {"J": "7,15"})
    text = gnuplot_script(run_experiment(cfg, settings), tmp_path / "heat.csv")
    assert '"heat.csv" using "h":"max_error"' in text
