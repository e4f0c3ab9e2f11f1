# src/signet/config.py
"""Runtime configuration read from the environment.

A ``.env`` file in the working directory is loaded once on import via
python-dotenv; real environment variables take precedence. Accessors read
``os.environ`` on every call so tests can patch values.

Variables:

- ``SIGNET_PRECISION_START``: starting interval precision in bits (default 64).
- ``SIGNET_PRECISION_MAX``: precision ceiling in bits (default 2**20).
- ``SIGNET_LOG_LEVEL``: CLI logging level name (default ``WARNING``).
- ``SIGNET_JOBS``: default worker count for batch mode (default 1).
"""

import os

from dotenv import load_dotenv

from signet.errors import DomainError

load_dotenv()

_DEFAULT_PRECISION = 64
_MIN_PRECISION = 8
_DEFAULT_MAX_PRECISION = 1 << 20
_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _int_var(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise DomainError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise DomainError(f"{name} must be at least {minimum}")
    return value


def precision_start() -> int:
    """Starting precision (bits) for interval sign certification.

    :returns: Bit precision, at least 8.
    :rtype: int
    :raises DomainError: If the variable is not an integer or too small.
    """
    return _int_var("SIGNET_PRECISION_START", _DEFAULT_PRECISION, _MIN_PRECISION)


def max_precision() -> int:
    """Precision ceiling (bits) before interval refinement gives up."""
    return _int_var("SIGNET_PRECISION_MAX", _DEFAULT_MAX_PRECISION, _MIN_PRECISION)


def log_level() -> str:
    """Logging level name for the CLI."""
    raw = os.getenv("SIGNET_LOG_LEVEL", "WARNING").strip().upper()
    if raw not in _LEVELS:
        raise DomainError(f"SIGNET_LOG_LEVEL must be one of {', '.join(_LEVELS)}")
    return raw


def default_jobs() -> int:
    """Default batch parallelism."""
    return _int_var("SIGNET_JOBS", 1, 1)
