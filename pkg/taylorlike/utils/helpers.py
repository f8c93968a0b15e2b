"""Utility functions for taylorlike."""

import math
from pathlib import Path


def ensure_dir(path: Path) -> Path:
    """Ensure a directory exists, creating it if necessary."""
    path.mkdir(parents=True, exist_ok=True)
    return path


def get_data_path() -> Path:
    """Get the taylorlike data directory (~/.taylorlike)."""
    return ensure_dir(Path.home() / ".taylorlike")


def _split_list(text: str) -> list[str]:
    parts = [p.strip() for p in str(text).split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"invalid list: {text!r} (expected comma-separated values)")
    return parts


def parse_int_list(text: str | int | list[int]) -> list[int]:
    """
    Parse a comma-separated list of integers ("1,2,4" -> [1, 2, 4]).

    Already-parsed values (an int or a list) are passed through.
    """
    if isinstance(text, bool):
        raise ValueError(f"invalid integer list: {text!r}")
    if isinstance(text, int):
        return [text]
    if isinstance(text, list):
        return [int(v) for v in text]
    values = []
    for part in _split_list(text):
        try:
            values.append(int(part))
        except ValueError:
            raise ValueError(f"invalid integer: {part!r} in {text!r}") from None
    return values


def parse_float_list(text: str | float | list[float]) -> list[float]:
    """Parse a comma-separated list of reals ("0.1,1,10" -> [0.1, 1.0, 10.0])."""
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        return [float(text)]
    if isinstance(text, list):
        return [float(v) for v in text]
    values = []
    for part in _split_list(text):
        try:
            value = float(part)
        except ValueError:
            raise ValueError(f"invalid number: {part!r} in {text!r}") from None
        if not math.isfinite(value):
            raise ValueError(f"non-finite number: {part!r} in {text!r}")
        values.append(value)
    return values


def parse_intervals(text: str | list) -> list[tuple[float, float]]:
    """
    Parse "a:b" interval pairs ("0:1,0.25:1" -> [(0.0, 1.0), (0.25, 1.0)]).
    """
    if isinstance(text, list):
        return [(float(a), float(b)) for a, b in text]
    intervals = []
    for part in _split_list(text):
        bounds = part.split(":")
        if len(bounds) != 2:
            raise ValueError(f"invalid interval: {part!r} (expected a:b)")
        try:
            a, b = float(bounds[0]), float(bounds[1])
        except ValueError:
            raise ValueError(f"invalid interval: {part!r} (expected a:b)") from None
        intervals.append((a, b))
    return intervals


def format_number(value: float) -> str:
    """Format a real with 17 significant digits in scientific notation."""
    return format(float(value), ".16e")


def observed_order(coarse_error: float, fine_error: float) -> float | None:
    """
    Observed order between two runs whose resolution differs by a factor of 2.

    Returns None when either error is zero (no meaningful ratio).
    """
    if coarse_error <= 0 or fine_error <= 0:
        return None
    return math.log2(coarse_error / fine_error)
