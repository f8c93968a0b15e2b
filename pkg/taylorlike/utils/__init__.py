"""Utility functions for taylorlike."""

from taylorlike.utils.helpers import (
    ensure_dir,
    format_number,
    get_data_path,
    observed_order,
    parse_float_list,
    parse_int_list,
    parse_intervals,
)

__all__ = [
    "ensure_dir",
    "format_number",
    "get_data_path",
    "observed_order",
    "parse_float_list",
    "parse_int_list",
    "parse_intervals",
]
