# Copyright (c) 2025, Gavin D'souza and Contributors
# See license.txt

import logging
import os
from dataclasses import dataclass
from functools import cache
from pathlib import Path

from wittenzeta import WITTENZETA_CACHE_ENV, WITTENZETA_ENV_PREFIX
from wittenzeta.constants import (
    DEFAULT_MAX_SERIES_TERMS,
    DEFAULT_ORACLE_CUTOFF,
    DEFAULT_ORACLE_LEVELS,
    DEFAULT_WORKING_DPS,
    MIN_WORKING_DPS,
)
from wittenzeta.exceptions import ConfigurationError


@dataclass(frozen=True)
class Settings:
    cache_path: Path | None = None
    working_dps: int = DEFAULT_WORKING_DPS
    max_series_terms: int = DEFAULT_MAX_SERIES_TERMS
    oracle_cutoff: int = DEFAULT_ORACLE_CUTOFF
    oracle_levels: int = DEFAULT_ORACLE_LEVELS
    log_level: int = logging.WARNING


def _env(name: str) -> str | None:
    return os.environ.get(f"{WITTENZETA_ENV_PREFIX}{name}") or None


def _env_int(name: str, default: int, minimum: int = 1) -> int:
    raw = _env(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{WITTENZETA_ENV_PREFIX}{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigurationError(
            f"{WITTENZETA_ENV_PREFIX}{name} must be >= {minimum}, got {value}"
        )
    return value


def _env_log_level() -> int:
    raw = _env("LOG_LEVEL")
    if raw is None:
        return logging.WARNING
    level = logging.getLevelName(raw.upper())
    if not isinstance(level, int):
        raise ConfigurationError(
            f"{WITTENZETA_ENV_PREFIX}LOG_LEVEL is not a logging level: {raw!r}"
        )
    return level


@cache
def get_settings() -> Settings:
    cache_path = os.environ.get(WITTENZETA_CACHE_ENV) or None
    return Settings(
        cache_path=Path(cache_path) if cache_path else None,
        working_dps=max(_env_int("DPS", DEFAULT_WORKING_DPS), MIN_WORKING_DPS),
        max_series_terms=_env_int("MAX_SERIES_TERMS", DEFAULT_MAX_SERIES_TERMS, minimum=16),
        oracle_cutoff=_env_int("ORACLE_CUTOFF", DEFAULT_ORACLE_CUTOFF, minimum=16),
        oracle_levels=_env_int("ORACLE_LEVELS", DEFAULT_ORACLE_LEVELS, minimum=2),
        log_level=_env_log_level(),
    )
