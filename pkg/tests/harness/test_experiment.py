"""Tests for experiment option validation."""

import pytest
from pydantic import ValidationError

from taylorlike.config.schema import Config
from taylorlike.functions.registry import FUNCTIONS
from taylorlike.harness import Command, ExperimentConfig, OutputFormat, UsageError


def build(command, **options):
    return ExperimentConfig.from_options(command, options)


def test_expand_lists_are_parsed():
    cfg = build("expand", fn="poly3", a=0.0, b=1.0, n="1,2,4")
    assert cfg.command is Command.EXPAND
    assert cfg.fn == ["poly3"]
    assert cfg.n == [1, 2, 4]
    assert cfg.methods == ["taylorlike"]


def test_aliases_resolve_to_ids():
    assert build("interp", fn="cubic, sin").fn == ["poly3", "sine"]


def test_interp_defaults():
    cfg = build("interp", fn="sine", cells="8,16,32", n="4")
    assert cfg.cells == [8, 16, 32]
    assert cfg.n == [4]
    assert cfg.quad_points == 32
    assert cfg.format is OutputFormat.CSV
    assert cfg.out == "-"


def test_both_expands_choices():
    assert build("expand", fn="exp", method="both").methods == ["classical", "taylorlike"]
    assert build("heat", scheme="BOTH").schemes == ["fd1", "fd2"]


def test_heat_defaults():
    cfg = build("heat")
    assert cfg.schemes == ["fd2"]
    assert cfg.J == [31]
    assert cfg.lambdas == [1.0]
    assert cfg.study == "none"
    assert cfg.T == 0.1


def test_sweep_defaults_to_every_function():
    cfg = build("sweep")
    assert cfg.functions == FUNCTIONS.ids()
    assert cfg.expand_intervals == [(0.0, 1.0), (0.0, 0.5), (0.25, 1.0)]


def test_sweep_intervals_flag():
    cfg = build("sweep", intervals="0:2,-1:1")
    assert cfg.expand_intervals == [(0.0, 2.0), (-1.0, 1.0)]


def test_settings_fill_unset_options():
    settings = Config(output={"format": "json", "slack": 1e-6}, heat={"T": 0.5})
    cfg = ExperimentConfig.from_options("heat", {"slack": None}, settings)
    assert cfg.format is OutputFormat.JSON
    assert cfg.slack == 1e-6
    assert cfg.T == 0.5
    assert ExperimentConfig.from_options("heat", {"T": 0.2}, settings).T == 0.2


def test_params_echo():
    params = build("heat", lam="1,10", out="report.csv", workers=4).params
    assert params["lambda"] == [1.0, 10.0]
    assert params["command"] == "heat"
    assert "lam" not in params
    assert "out" not in params and "workers" not in params


def test_config_is_frozen():
    cfg = build("heat")
    with pytest.raises(ValidationError):
        cfg.T = 1.0


# ── Usage errors ──────────────────────────────────────────────────


@pytest.mark.parametrize(
    "command,options,message",
    [
        ("heat", {"scheme": "fd3"}, "unknown scheme: fd3 (expected fd1|fd2)"),
        ("expand", {"fn": "poly3", "method": "simpson"}, "unknown method: simpson (expected classical|taylorlike)"),
        ("expand", {"fn": "nope"}, "unknown function: nope"),
        ("expand", {}, "missing required flag --fn for expand"),
        ("interp", {"cells": "8"}, "missing required flag --fn for interp"),
        ("expand", {"fn": "exp", "a": 1.0, "b": 1.0}, "--a must be smaller than --b"),
        ("expand", {"fn": "exp", "n": "0,2"}, "--n values must be positive"),
        ("expand", {"fn": "exp", "n": "2097152"}, "--n values must not exceed 1048576"),
        ("expand", {"fn": "exp", "n": "1,x"}, "invalid integer"),
        ("interp", {"fn": "exp", "quad_points": 1}, "--quad-points must be at least 2"),
        ("heat", {"lam": "1", "k": "0.01"}, "use either --lambda or --k"),
        ("heat", {"lam": "-1"}, "--lambda values must be positive"),
        ("heat", {"T": 0.0}, "--T must be positive"),
        ("heat", {"study": "time"}, "--study time needs a --k list"),
        ("heat", {"study": "space", "k": "0.01"}, "--study space runs at fixed lambda"),
        ("heat", {"problem": "gauss"}, "unknown problem: gauss (expected sine|zero)"),
        ("heat", {"gnuplot": True}, "--gnuplot needs --format csv"),
        ("heat", {"workers": 0}, "--workers must be at least 1"),
        ("sweep", {"intervals": "1:0"}, "--intervals needs a < b"),
    ],
)
def test_usage_errors(command, options, message):
    with pytest.raises(UsageError) as excinfo:
        ExperimentConfig.from_options(command, options)
    assert message in str(excinfo.value)
    assert "\n" not in str(excinfo.value)


def test_unknown_option_names_the_flag():
    with pytest.raises(UsageError, match="invalid --bogus"):
        build("heat", bogus=1)


def test_wrong_type_names_the_flag():
    with pytest.raises(UsageError, match="invalid --study"):
        build("heat", study="sideways")
