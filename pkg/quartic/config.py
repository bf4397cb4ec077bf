"""Runtime settings read from the environment."""
import os
import logging
from typing import Optional

from quartic.errors import ConfigError

logger = logging.getLogger(__name__)


def _int_setting(name: str, default: int, minimum: int = 1) -> int:
    """Read a positive integer setting from the environment.

    Args:
        name: Environment variable name
        default: Value used when the variable is unset or empty
        minimum: Smallest accepted value

    Returns:
        The parsed integer
    """
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


LOG_LEVEL = os.getenv("QUARTIC_LOG_LEVEL", "INFO").upper()

# Digit budget for solution streams; heights roughly quadruple per doubling
MAX_DIGITS = _int_setting("QUARTIC_MAX_DIGITS", 120)

# Trial division bound used by squarefree splitting and lambda reduction
TRIAL_PRIME_LIMIT = _int_setting("QUARTIC_TRIAL_PRIME_LIMIT", 1_000_000, minimum=2)

# Mazur: a rational torsion point has order at most 12
TORSION_BOUND = _int_setting("QUARTIC_TORSION_BOUND", 12)

CACHE_SIZE = _int_setting("QUARTIC_CACHE_SIZE", 64)

REGISTRY_FILE: Optional[str] = os.getenv("QUARTIC_REGISTRY_FILE") or None

# Redis ladder store; unset host keeps ladders in process
REDIS_HOST: Optional[str] = os.getenv("QUARTIC_REDIS_HOST") or None
REDIS_PORT = _int_setting("QUARTIC_REDIS_PORT", 6379)
REDIS_DB = _int_setting("QUARTIC_REDIS_DB", 0, minimum=0)
REDIS_PASSWORD: Optional[str] = os.getenv("QUARTIC_REDIS_PASSWORD") or None
LADDER_TTL = _int_setting("QUARTIC_LADDER_TTL", 86400)
