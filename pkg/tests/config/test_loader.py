"""Tests for config.json loading and saving."""

import json

import pytest

from taylorlike.config.loader import (
    camel_to_snake,
    get_config_path,
    convert_keys,
    load_config,
    save_config,
    snake_to_camel,
)
from taylorlike.config.schema import Config


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("TAYLORLIKE_HEAT__T", "TAYLORLIKE_OUTPUT__WORKERS", "TAYLORLIKE_INTERPOLATION__QUAD_POINTS"):
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    config = Config()
    assert config.interpolation.quad_points == 32
    assert config.expansion.max_n == 2**20
    assert config.heat.T == 0.1
    assert config.output.format == "csv"
    assert config.output.slack == 1e-9


def test_missing_file_gives_defaults(tmp_path):
    assert load_config(tmp_path / "absent.json") == Config()


def test_camel_case_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"interpolation": {"quadPoints": 16}, "heat": {"T": 0.3, "maxSteps": 500}}))
    config = load_config(path)
    assert config.interpolation.quad_points == 16
    assert config.heat.T == 0.3
    assert config.heat.max_steps == 500


def test_broken_file_falls_back_to_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json")
    assert load_config(path) == Config()


def test_save_round_trip(tmp_path):
    config = Config(output={"format": "json", "workers": 3})
    path = save_config(config, tmp_path / "nested" / "config.json")
    saved = json.loads(path.read_text())
    assert saved["output"] == {"format": "json", "slack": 1e-9, "workers": 3, "logLevel": "WARNING"}
    assert load_config(path) == config


def test_environment_beats_file(tmp_path, monkeypatch):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"heat": {"T": 0.3}, "output": {"workers": 2}}))
    monkeypatch.setenv("TAYLORLIKE_OUTPUT__WORKERS", "5")
    config = load_config(path)
    assert config.output.workers == 5
    assert config.heat.T == 0.3


def test_invalid_values_are_rejected():
    with pytest.raises(ValueError):
        Config(interpolation={"quad_points": 1})


def test_key_conversion():
    assert camel_to_snake("quadPoints") == "quad_points"
    assert camel_to_snake("T") == "T"
    assert snake_to_camel("safe_mode_widening") == "safeModeWidening"
    assert convert_keys({"registry": {"scanPoints": 11}, "list": [{"logLevel": "INFO"}]}) == {
        "registry": {"scan_points": 11},
        "list": [{"log_level": "INFO"}],
    }


def test_default_path_lives_in_the_data_directory(tmp_path, monkeypatch):
    monkeypatch.setenv("HOME", str(tmp_path))
    path = get_config_path()
    assert path == tmp_path / ".taylorlike" / "config.json"
    assert path.parent.is_dir()
    assert save_config(Config()) == path
    assert load_config() == Config()
