"""
Configuration loader for Monotone Hurwitz Lab.

Handles loading environment variables, enumeration bounds,
the memo cache location and parallelism settings.
"""

import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from .exceptions import ConfigError, InvalidBoundError
from .models import EnumerationBounds, HARD_LIMITS

logger = logging.getLogger(__name__)

_BOUND_VARIABLES = {
    "monotone_d_max": "HURWITZ_MONOTONE_D_MAX",
    "monotone_r_max": "HURWITZ_MONOTONE_R_MAX",
    "classical_d_max": "HURWITZ_CLASSICAL_D_MAX",
    "classical_r_max": "HURWITZ_CLASSICAL_R_MAX",
    "rank_d_max": "HURWITZ_RANK_D_MAX",
    "rank_r_max": "HURWITZ_RANK_R_MAX",
}


class ConfigLoader:
    """
    Loads and validates application configuration.

    Manages enumeration bounds, the group-algebra cap, the default
    memo cache path and the worker count.
    """

    def __init__(
        self,
        bounds: Optional[EnumerationBounds] = None,
        cache_path: Optional[Path] = None,
        jm_d_max: int = 8,
        workers: int = 1,
        log_level: str = "WARNING"
    ):
        """
        Initialize configuration.

        Args:
            bounds: Oracle enumeration limits (default: EnumerationBounds())
            cache_path: Memo cache file (default: none, memo stays in memory)
            jm_d_max: Largest d for dense group-algebra elements (default: 8)
            workers: Parallel workers for enumeration (default: 1)
            log_level: Logging level name (default: WARNING)
        """
        self.bounds = bounds or EnumerationBounds()
        self.cache_path = cache_path
        self.jm_d_max = jm_d_max
        self.workers = workers
        self.log_level = log_level

    @classmethod
    def from_env(cls, env_path: Optional[Path] = None) -> "ConfigLoader":
        """
        Create ConfigLoader from environment variables.

        Args:
            env_path: Path to .env file (default: searches current directory and parents)

        Returns:
            ConfigLoader instance

        Raises:
            InvalidBoundError: If a bound exceeds its hard limit
        """
        if env_path:
            load_dotenv(env_path)
        else:
            load_dotenv()

        bound_values = {}
        for field_name, variable in _BOUND_VARIABLES.items():
            parsed = _read_int(variable)
            if parsed is not None:
                bound_values[field_name] = parsed

        try:
            bounds = EnumerationBounds(**bound_values)
        except ValidationError as e:
            raise InvalidBoundError(f"Invalid enumeration bounds in environment: {e}")

        cache_str = os.getenv("HURWITZ_CACHE")
        cache_path = Path(cache_str).expanduser() if cache_str else None

        jm_d_max = _read_int("HURWITZ_JM_D_MAX")
        workers = _read_int("HURWITZ_WORKERS")

        return cls(
            bounds=bounds,
            cache_path=cache_path,
            jm_d_max=jm_d_max if jm_d_max is not None else 8,
            workers=workers if workers is not None else 1,
            log_level=os.getenv("HURWITZ_LOG_LEVEL", "WARNING").upper()
        )

    def with_overrides(self, **overrides) -> "ConfigLoader":
        """
        Return a copy with CLI overrides applied.

        Bound names (e.g. ``monotone_d_max``) update the bounds; other keys
        replace attributes. ``None`` values are ignored.
        """
        bound_updates = {
            key: value for key, value in overrides.items()
            if key in _BOUND_VARIABLES and value is not None
        }
        try:
            bounds = self.bounds.model_copy(update=bound_updates)
            bounds = EnumerationBounds(**bounds.model_dump())
        except ValidationError as e:
            raise InvalidBoundError(f"Invalid enumeration bounds: {e}")

        def pick(name):
            value = overrides.get(name)
            return getattr(self, name) if value is None else value

        return ConfigLoader(
            bounds=bounds,
            cache_path=pick("cache_path"),
            jm_d_max=pick("jm_d_max"),
            workers=pick("workers"),
            log_level=pick("log_level")
        )

    def validate(self) -> bool:
        """
        Validate configuration.

        Returns:
            True if configuration is valid

        Raises:
            InvalidBoundError: If a cap is outside its hard limit
            ConfigError: If the cache directory is not writable
        """
        if not 1 <= self.jm_d_max <= HARD_LIMITS["jm_d_max"]:
            raise InvalidBoundError(
                f"jm_d_max={self.jm_d_max} must lie in 1..{HARD_LIMITS['jm_d_max']}"
            )
        if self.workers < 1:
            raise InvalidBoundError(f"workers must be positive, got {self.workers}")

        if self.cache_path is not None:
            directory = self.cache_path.parent
            if directory.exists() and not os.access(directory, os.W_OK):
                raise ConfigError(f"Cannot write to cache directory: {directory}")

        return True

    def __repr__(self) -> str:
        return (
            f"ConfigLoader(bounds={self.bounds.model_dump()}, "
            f"cache_path={self.cache_path}, "
            f"jm_d_max={self.jm_d_max}, "
            f"workers={self.workers})"
        )


def _read_int(variable: str) -> Optional[int]:
    """Read an integer variable; malformed values fall back to the default."""
    raw = os.getenv(variable)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", variable, raw)
        return None
