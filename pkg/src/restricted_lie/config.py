"""Runtime settings read from the environment and overridden by CLI flags."""

from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Any

from .errors import ValidationError
from .validation import Field, validate_mapping

if TYPE_CHECKING:
    from .iso_search.search import SearchBudget

ENV_PREFIX = "RESTRICTED_LIE_"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

SETTINGS_SCHEMA = {
    "log_level": Field(type=str, enum=LOG_LEVELS),
    "max_candidates": Field(type=int, min_value=1),
    "time_limit": Field(type=(int, float), required=False, min_value=0.0),
    "ladder": Field(type=tuple, min_length=1, max_length=8),
    "threads": Field(type=int, min_value=1, max_value=256),
    "seed": Field(type=int, min_value=0),
    "profile_depth": Field(type=int, min_value=1, max_value=8),
    "debug_checks": Field(type=bool),
}


@dataclass(frozen=True)
class Settings:
    log_level: str = "WARNING"
    max_candidates: int = 2_000_000
    time_limit: float | None = None
    ladder: tuple[int, ...] = (1, 2, 4)
    threads: int = 1
    seed: int = 0
    profile_depth: int = 3
    debug_checks: bool = False

    def __post_init__(self) -> None:
        values = {
            name: getattr(self, name)
            for name in SETTINGS_SCHEMA
            if getattr(self, name) is not None
        }
        validate_mapping(SETTINGS_SCHEMA, values)
        if list(self.ladder) != sorted(set(self.ladder)) or min(self.ladder) < 1:
            raise ValidationError("Field 'ladder' must be ascending positive degrees")

    def with_overrides(self, **overrides: Any) -> Settings:
        """Return a copy with every non-None override applied."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes)

    def search_budget(self) -> SearchBudget:
        from .iso_search.search import SearchBudget

        return SearchBudget(
            max_candidates=self.max_candidates,
            time_limit=self.time_limit,
            ladder=self.ladder,
        )


def parse_ladder(text: str) -> tuple[int, ...]:
    """Parse a ladder such as ``"1,2,4"``.

    Raises:
        ValidationError: If an entry is not a positive integer
    """
    try:
        degrees = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise ValidationError(f"Invalid ladder '{text}': {e}") from e
    if not degrees:
        raise ValidationError(f"Invalid ladder '{text}': empty")
    return degrees


def _parse_bool(text: str) -> bool:
    return text.strip().lower() in ("1", "true", "yes", "on")


def _read(environ: Mapping[str, str], name: str) -> str | None:
    value = environ.get(ENV_PREFIX + name)
    return value if value not in (None, "") else None


def load_settings(environ: Mapping[str, str] | None = None) -> Settings:
    """Build settings from ``RESTRICTED_LIE_*`` environment variables.

    Args:
        environ: Environment mapping (defaults to ``os.environ``)

    Raises:
        ValidationError: If a variable holds an invalid value
    """
    env = os.environ if environ is None else environ
    overrides: dict[str, Any] = {}

    try:
        if (level := _read(env, "LOG_LEVEL")) is not None:
            overrides["log_level"] = level.upper()
        if (budget := _read(env, "BUDGET")) is not None:
            overrides["max_candidates"] = int(budget)
        if (limit := _read(env, "TIME_LIMIT")) is not None:
            overrides["time_limit"] = float(limit)
        if (threads := _read(env, "THREADS")) is not None:
            overrides["threads"] = int(threads)
        if (seed := _read(env, "SEED")) is not None:
            overrides["seed"] = int(seed)
        if (depth := _read(env, "PROFILE_DEPTH")) is not None:
            overrides["profile_depth"] = int(depth)
    except ValueError as e:
        raise ValidationError(f"Invalid environment setting: {e}") from e

    if (ladder := _read(env, "LADDER")) is not None:
        overrides["ladder"] = parse_ladder(ladder)
    if (debug := _read(env, "DEBUG_CHECKS")) is not None:
        overrides["debug_checks"] = _parse_bool(debug)

    return Settings().with_overrides(**overrides)
