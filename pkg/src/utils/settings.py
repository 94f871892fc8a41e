"""Environment-driven settings for intervalsep.

Every knob is a plain environment variable (a `.env` file is honoured by the
CLI entry point). Library calls take explicit keyword arguments and only fall
back to these values when the caller passes None.
"""

import os
from functools import lru_cache

from pydantic import BaseModel, Field, field_validator

# Brute force enumerates n! orders; 10! is the hard ceiling.
BRUTE_FORCE_HARD_LIMIT = 10

_TRUTHY = {"1", "true", "yes", "on"}


class Settings(BaseModel):
    """Validated runtime settings."""

    log_level: str = "WARNING"
    debug_checks: bool = False
    brute_force_limit: int = Field(default=BRUTE_FORCE_HARD_LIMIT, ge=1, le=BRUTE_FORCE_HARD_LIMIT)
    bench_prelim_max: int = Field(default=20000, ge=0)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Normalize the level name and reject unknown ones."""
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "WARN", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {v}")
        return "WARNING" if level == "WARN" else level


def _env_flag(name: str) -> bool:
    return os.getenv(name, "").strip().lower() in _TRUTHY


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Read settings from the environment once per process.

    Returns:
        Settings instance

    Raises:
        pydantic.ValidationError: if a variable holds an invalid value
    """
    return Settings(
        log_level=os.getenv("LOG_LEVEL", "WARNING"),
        debug_checks=_env_flag("INTERVALSEP_DEBUG_CHECKS"),
        brute_force_limit=int(os.getenv("INTERVALSEP_BRUTE_FORCE_LIMIT", str(BRUTE_FORCE_HARD_LIMIT))),
        bench_prelim_max=int(os.getenv("INTERVALSEP_BENCH_PRELIM_MAX", "20000")),
    )
