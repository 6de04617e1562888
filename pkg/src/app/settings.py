from __future__ import annotations
import os
from dataclasses import dataclass
from fractions import Fraction

from src.app.errors import ConfigError

_MODES = {"randomized", "exhaustive"}
_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def _get_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name, "").strip()
    if raw == "":
        return default
    try:
        v = int(raw)
    except ValueError as e:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from e
    if v < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {v}")
    return v


@dataclass(frozen=True)
class Settings:
    log_level: str

    # solve defaults (CLI flags override)
    eps: Fraction
    seed: int
    mode: str

    # numerics
    sqrt_precision: int
    exhaustive_grid_limit: int
    ellipsoid_min_precision: int


def load_settings() -> Settings:
    level = os.getenv("CONVEXPOLY_LOG_LEVEL", "INFO").upper().strip()
    if level not in _LEVELS:
        raise ConfigError(f"CONVEXPOLY_LOG_LEVEL must be one of {sorted(_LEVELS)}, got {level!r}")

    eps_raw = os.getenv("CONVEXPOLY_EPS", "1/1048576").strip()
    try:
        eps = Fraction(eps_raw)
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"CONVEXPOLY_EPS is not a rational: {eps_raw!r}") from e
    if eps <= 0:
        raise ConfigError("CONVEXPOLY_EPS must be positive")

    mode = os.getenv("CONVEXPOLY_MODE", "randomized").lower().strip()
    if mode not in _MODES:
        raise ConfigError(f"CONVEXPOLY_MODE must be one of {sorted(_MODES)}, got {mode!r}")

    return Settings(
        log_level=level,
        eps=eps,
        seed=_get_int("CONVEXPOLY_SEED", 0),
        mode=mode,
        sqrt_precision=_get_int("CONVEXPOLY_SQRT_PRECISION", 32, minimum=1),
        exhaustive_grid_limit=_get_int("CONVEXPOLY_EXHAUSTIVE_GRID_LIMIT", 1 << 20, minimum=1),
        ellipsoid_min_precision=_get_int("CONVEXPOLY_ELLIPSOID_MIN_PRECISION", 64, minimum=16),
    )
