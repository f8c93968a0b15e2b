"""Validated experiment configuration."""

from __future__ import annotations

from enum import Enum
from typing import Any, Literal, Optional

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    ValidationInfo,
    field_validator,
    model_validator,
)

from taylorlike.config.schema import Config
from taylorlike.functions.registry import FUNCTIONS
from taylorlike.heat.problem import PROBLEMS
from taylorlike.utils.helpers import parse_float_list, parse_int_list, parse_intervals


class ExperimentError(Exception):
    """Raised when an experiment cannot be configured or its report written."""


class UsageError(ExperimentError):
    """Raised for invalid command-line usage (exit status 2)."""


class EmitError(ExperimentError):
    """Raised when a report cannot be written (exit status 4)."""


class Command(str, Enum):
    EXPAND = "expand"
    INTERP = "interp"
    HEAT = "heat"
    SWEEP = "sweep"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


METHODS = ("classical", "taylorlike")
SCHEMES = ("fd1", "fd2")

# Keys left out of the parameters echo so that reports only depend on the experiment
_NOT_ECHOED = {"out", "workers", "gnuplot"}


def _choice(value: Any, name: str, choices: tuple[str, ...], allow_both: bool = True) -> str:
    text = str(getattr(value, "value", value)).strip().lower()
    valid = (*choices, "both") if allow_both else choices
    if text not in valid:
        expected = "|".join(choices)
        raise ValueError(f"unknown {name}: {value} (expected {expected})")
    return text


class ExperimentConfig(BaseModel):
    """
    One validated CLI invocation.

    List-valued parameters accept comma-separated strings ("1,2,4") as well as
    lists; every numeric parameter is range-checked here so that the runner
    only sees valid input.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    fn: Optional[list[str]] = None
    a: float = 0.0
    b: float = 1.0
    intervals: Optional[list[tuple[float, float]]] = None
    n: list[int] = Field(default_factory=lambda: [1])
    method: str = "taylorlike"
    cells: list[int] = Field(default_factory=lambda: [8])
    scheme: str = "fd2"
    problem: str = "sine"
    J: list[int] = Field(default_factory=lambda: [31])
    lam: Optional[list[float]] = None
    k: Optional[list[float]] = None
    T: float = 0.1
    study: Literal["space", "time", "none"] = "none"
    quad_points: int = 32
    format: OutputFormat = OutputFormat.CSV
    out: str = "-"
    strict: bool = False
    safe_mode: bool = False
    workers: int = 1
    slack: float = 1e-9
    gnuplot: bool = False

    # ── Field validators ──────────────────────────────────────────

    @field_validator("fn", mode="before")
    @classmethod
    def _parse_functions(cls, value: Any) -> Any:
        if value is None:
            return None
        names = value.split(",") if isinstance(value, str) else list(value)
        ids = []
        for name in (str(name).strip() for name in names):
            spec = FUNCTIONS.get(name)
            if spec is None:
                raise ValueError(f"unknown function: {name} (available: {', '.join(FUNCTIONS.ids())})")
            ids.append(spec.id)
        return ids

    @field_validator("n", "cells", "J", mode="before")
    @classmethod
    def _parse_int_list(cls, value: Any, info: ValidationInfo) -> list[int]:
        values = parse_int_list(value)
        flag = f"--{info.field_name}"
        if any(v < 1 for v in values):
            raise ValueError(f"{flag} values must be positive integers, got {values}")
        max_n = (info.context or {}).get("max_n")
        if info.field_name == "n" and max_n is not None and max(values) > max_n:
            raise ValueError(f"--n values must not exceed {max_n}, got {max(values)}")
        return values

    @field_validator("lam", "k", mode="before")
    @classmethod
    def _parse_positive_floats(cls, value: Any, info: ValidationInfo) -> Any:
        if value is None:
            return None
        values = parse_float_list(value)
        if any(v <= 0 for v in values):
            flag = "--lambda" if info.field_name == "lam" else "--k"
            raise ValueError(f"{flag} values must be positive, got {values}")
        return values

    @field_validator("intervals", mode="before")
    @classmethod
    def _parse_intervals(cls, value: Any) -> Any:
        if value is None:
            return None
        intervals = parse_intervals(value)
        for a, b in intervals:
            if not a < b:
                raise ValueError(f"--intervals needs a < b in every pair, got {a}:{b}")
        return intervals

    @field_validator("method", mode="before")
    @classmethod
    def _check_method(cls, value: Any) -> str:
        return _choice(value, "method", METHODS)

    @field_validator("scheme", mode="before")
    @classmethod
    def _check_scheme(cls, value: Any) -> str:
        return _choice(value, "scheme", SCHEMES)

    @field_validator("problem", mode="before")
    @classmethod
    def _check_problem(cls, value: Any) -> str:
        return _choice(value, "problem", tuple(PROBLEMS), allow_both=False)

    @field_validator("T")
    @classmethod
    def _check_final_time(cls, value: float) -> float:
        if not value > 0:
            raise ValueError(f"--T must be positive, got {value}")
        return value

    @field_validator("quad_points")
    @classmethod
    def _check_quad_points(cls, value: int) -> int:
        if value < 2:
            raise ValueError(f"--quad-points must be at least 2, got {value}")
        return value

    @field_validator("workers")
    @classmethod
    def _check_workers(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"--workers must be at least 1, got {value}")
        return value

    @field_validator("slack")
    @classmethod
    def _check_slack(cls, value: float) -> float:
        if value < 0:
            raise ValueError(f"--slack must be nonnegative, got {value}")
        return value

    # ── Cross-field checks ────────────────────────────────────────

    @model_validator(mode="after")
    def _check_combination(self) -> ExperimentConfig:
        if self.command in (Command.EXPAND, Command.INTERP) and not self.fn:
            raise ValueError(f"missing required flag --fn for {self.command.value}")
        if self.command is Command.EXPAND and not self.a < self.b:
            raise ValueError(f"--a must be smaller than --b, got a={self.a}, b={self.b}")
        if self.lam is not None and self.k is not None:
            raise ValueError("use either --lambda or --k, not both")
        if self.study == "time" and self.k is None:
            raise ValueError("--study time needs a --k list (halving time steps)")
        if self.study == "space" and self.k is not None:
            raise ValueError("--study space runs at fixed lambda; use --lambda instead of --k")
        if self.gnuplot and (self.out == "-" or self.format is not OutputFormat.CSV):
            raise ValueError("--gnuplot needs --format csv and a file given with --out")
        return self

    # ── Derived views ─────────────────────────────────────────────

    @property
    def methods(self) -> list[str]:
        return list(METHODS) if self.method == "both" else [self.method]

    @property
    def schemes(self) -> list[str]:
        return list(SCHEMES) if self.scheme == "both" else [self.scheme]

    @property
    def functions(self) -> list[str]:
        """Requested function ids; every registered id for a sweep without --fn."""
        return list(self.fn) if self.fn else FUNCTIONS.ids()

    @property
    def expand_intervals(self) -> list[tuple[float, float]]:
        if self.command is Command.SWEEP and self.intervals:
            return list(self.intervals)
        return [(self.a, self.b)]

    @property
    def lambdas(self) -> list[float]:
        return list(self.lam) if self.lam is not None else [1.0]

    @property
    def params(self) -> dict[str, Any]:
        """Parameters echo written into JSON reports."""
        data = self.model_dump(mode="json", exclude=_NOT_ECHOED)
        data["lambda"] = data.pop("lam")
        return {key: value for key, value in data.items() if value is not None}

    @classmethod
    def from_options(
        cls,
        command: Command | str,
        options: dict[str, Any],
        settings: Config | None = None,
    ) -> ExperimentConfig:
        """
        Build a config from raw option values, filling unset ones from settings.

        Raises:
            UsageError: With a one-line message naming the offending flag.
        """
        settings = settings or Config()
        data: dict[str, Any] = {
            "quad_points": settings.interpolation.quad_points,
            "format": settings.output.format,
            "slack": settings.output.slack,
            "workers": settings.output.workers,
            "T": settings.heat.T,
        }
        if Command(command) is Command.SWEEP:
            data["intervals"] = settings.expansion.intervals
        data.update({key: value for key, value in options.items() if value is not None})
        data["command"] = Command(command)
        try:
            return cls.model_validate(data, context={"max_n": settings.expansion.max_n})
        except ValidationError as e:
            raise UsageError(_usage_message(e)) from None


def _usage_message(error: ValidationError) -> str:
    """First validation failure as a one-line message."""
    detail = error.errors()[0]
    cause = (detail.get("ctx") or {}).get("error")
    if cause is not None:
        return str(cause)
    field = ".".join(str(part) for part in detail["loc"]) or "config"
    flag = "--lambda" if field == "lam" else f"--{field.replace('_', '-')}"
    return f"invalid {flag}: {detail['msg']}"
