"""Runtime configuration helpers for the Jack vertex-operator lab."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from functools import lru_cache
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from .errors import ResourceGuardError

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


@dataclass(frozen=True)
class Settings:
    """Immutable container for lab configuration."""

    cache_dir: Path = Path(".jack_vertex_cache")
    max_delta_st: int = 12
    max_kernel_cutoff: int = 10
    max_weight: int = 10
    workers: int = 1
    cache_fsync: bool = False
    log_level: str = "INFO"

    def with_cache_dir(self, cache_dir: Optional[Path | str]) -> "Settings":
        if cache_dir is None:
            return self
        return replace(self, cache_dir=Path(cache_dir))


def _as_bool(value: Optional[str], default: bool) -> bool:
    """Convert environment strings to booleans."""
    if value is None:
        return default
    return value.strip().lower() not in {"0", "false", "no"}


def _coerce_positive_int(value: Optional[str], default: int) -> int:
    """Parse a positive integer, falling back to ``default`` on junk."""
    if value is None:
        return default
    try:
        parsed = int(value.strip())
    except ValueError:
        return default
    return parsed if parsed > 0 else default


def _coerce_log_level(value: Optional[str]) -> str:
    if value is None:
        return "INFO"
    normalized = value.strip().upper()
    if normalized in _LOG_LEVELS:
        return normalized
    return "INFO"


def load_settings() -> Settings:
    """Load configuration from the environment (and `.env`)."""
    load_dotenv()
    return Settings(
        cache_dir=Path(os.getenv("JACK_VERTEX_CACHE_DIR", ".jack_vertex_cache")),
        max_delta_st=_coerce_positive_int(os.getenv("JACK_VERTEX_MAX_DELTA_ST"), 12),
        max_kernel_cutoff=_coerce_positive_int(
            os.getenv("JACK_VERTEX_MAX_KERNEL_CUTOFF"), 10
        ),
        max_weight=_coerce_positive_int(os.getenv("JACK_VERTEX_MAX_WEIGHT"), 10),
        workers=_coerce_positive_int(os.getenv("JACK_VERTEX_WORKERS"), 1),
        cache_fsync=_as_bool(os.getenv("JACK_VERTEX_CACHE_FSYNC"), False),
        log_level=_coerce_log_level(os.getenv("JACK_VERTEX_LOG_LEVEL")),
    )


@lru_cache(maxsize=1)
def current_settings() -> Settings:
    """Process-wide settings, loaded once."""
    return load_settings()


def enforce_bound(what: str, requested: int, bound: Optional[int]) -> None:
    """Raise :class:`ResourceGuardError` when ``requested`` exceeds ``bound``."""
    if bound is not None and requested > bound:
        logging.getLogger(__name__).warning(
            "resource guard tripped: %s=%s > %s", what, requested, bound
        )
        raise ResourceGuardError(what, requested, bound)


__all__ = ["Settings", "current_settings", "enforce_bound", "load_settings"]
