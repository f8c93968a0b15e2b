"""CLI module for taylorlike."""
