"""Configuration schema for taylorlike."""

from typing import Literal

from pydantic import BaseModel, Field
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)


class RegistryConfig(BaseModel):
    """Second-derivative bound settings."""
    scan_points: int = Field(default=10_001, ge=2)  # Dense scan when no closed form is known
    safe_mode_widening: float = Field(default=0.01, ge=0.0)  # Relative padding of sampled bounds


class ExpansionSettings(BaseModel):
    """Expansion sweep settings."""
    max_n: int = Field(default=2**20, ge=1)  # CLI cap on n
    intervals: list[tuple[float, float]] = Field(
        default_factory=lambda: [(0.0, 1.0), (0.0, 0.5), (0.25, 1.0)]
    )


class InterpolationSettings(BaseModel):
    """P1 interpolation settings."""
    quad_points: int = Field(default=32, ge=2)  # Gauss-Legendre nodes per cell (or sub-piece)
    sign_samples: int = Field(default=64, ge=2)  # Samples per cell used to bracket sign changes


class HeatSettings(BaseModel):
    """Heat equation settings."""
    T: float = Field(default=0.1, gt=0.0)
    max_steps: int = Field(default=10_000_000, ge=1)
    theta_samples: int = Field(default=1000, ge=2)  # Fourier angles for the amplification scan


class OutputSettings(BaseModel):
    """Report emission settings."""
    format: Literal["csv", "json"] = "csv"
    slack: float = Field(default=1e-9, ge=0.0)  # Absolute slack of the pass flags
    workers: int = Field(default=1, ge=1)
    log_level: str = "WARNING"


class Config(BaseSettings):
    """Root configuration for taylorlike."""
    registry: RegistryConfig = Field(default_factory=RegistryConfig)
    expansion: ExpansionSettings = Field(default_factory=ExpansionSettings)
    interpolation: InterpolationSettings = Field(default_factory=InterpolationSettings)
    heat: HeatSettings = Field(default_factory=HeatSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)

    model_config = SettingsConfigDict(
        env_prefix="TAYLORLIKE_",
        env_nested_delimiter="__",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # Shell environment beats config.json values (passed as init kwargs)
        return env_settings, dotenv_settings, init_settings, file_secret_settings
