"""
Runtime settings.

Only one environment variable is read (GENINV_THREADS); everything else
comes from defaults and is overridden per invocation by CLI flags.
"""

from __future__ import annotations

import os

from pydantic import BaseModel, ConfigDict, Field


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    threads: int = Field(default=1, ge=1)
    # exhaustive caps on the matrix size
    max_q_size: int = Field(default=3, ge=1)
    max_fp_size: int = Field(default=2, ge=1)
    # default verification budget
    max_cases: int = Field(default=5_000_000, ge=1)
    max_seconds: float = Field(default=300.0, gt=0)


def load_settings(**overrides) -> Settings:
    threads = os.getenv("GENINV_THREADS", "").strip()
    values = {}
    if threads:
        try:
            values["threads"] = max(1, int(threads))
        except ValueError:
            pass
    values.update({k: v for k, v in overrides.items() if v is not None})
    return Settings(**values)


_settings: Settings | None = None


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def set_settings(settings: Settings) -> None:
    global _settings
    _settings = settings
