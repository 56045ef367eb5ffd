"""
Logging for kummerx.

Every module logger is a child of the ``kummerx`` logger, which owns the
only handler. Records go to stderr; stdout is reserved for CSV and JSONL
output. Worker processes spawned by the sweep runner import this module
afresh and pick up the same defaults from the environment.
"""

import logging
import os
import sys
import warnings
from typing import Optional

ROOT_LOGGER = "kummerx"
VERBOSE_ENV_VAR = "KUMMERX_VERBOSE"

_DETAILED = logging.Formatter(
    "%(asctime)s - %(name)s - %(levelname)s - %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
)
_BRIEF = logging.Formatter("%(levelname)s: %(message)s")

# Library loggers that chatter when a process pool starts or stops
_LIBRARY_LOGGERS = ("asyncio", "concurrent.futures")


def _root() -> logging.Logger:
    root = logging.getLogger(ROOT_LOGGER)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(_DETAILED)
        root.addHandler(handler)
        root.setLevel(_default_level())
        root.propagate = False
    return root


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    Get a logger under the kummerx hierarchy.

    Args:
        name: Logger name, usually ``__name__``; names outside the
            ``kummerx`` package are nested under it
        level: Optional level for this logger only

    Returns:
        Logger that propagates to the shared stderr handler
    """
    _root()
    if name != ROOT_LOGGER and not name.startswith(ROOT_LOGGER + "."):
        name = f"{ROOT_LOGGER}.{name}"
    logger = logging.getLogger(name)
    if level:
        logger.setLevel(_parse_level(level))
    return logger


def set_log_level(level: str) -> None:
    """
    Set the level for all of kummerx.

    - DEBUG: per-character and per-Hurwitz-batch detail
    - INFO: cache hits, sweep progress, skipped primes
    - WARNING: precision escalations and other recoverable events
    - ERROR: certification and verification failures only

    DEBUG and INFO use the timestamped format, quieter levels print the
    bare level and message.

    Raises:
        ValueError: If ``level`` is not a logging level name
    """
    numeric = _parse_level(level)
    root = _root()
    root.setLevel(numeric)
    for handler in root.handlers:
        handler.setFormatter(_DETAILED if numeric <= logging.INFO else _BRIEF)

    for name, logger in logging.Logger.manager.loggerDict.items():
        if name.startswith(ROOT_LOGGER + ".") and isinstance(logger, logging.Logger):
            logger.setLevel(logging.NOTSET)

    library_level = logging.DEBUG if numeric <= logging.DEBUG else max(numeric, logging.WARNING)
    for name in _LIBRARY_LOGGERS:
        logging.getLogger(name).setLevel(library_level)
    if numeric >= logging.WARNING:
        warnings.filterwarnings("ignore", category=DeprecationWarning)


def _parse_level(level: str) -> int:
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level: {level}")
    return numeric


def _default_level() -> int:
    verbose = os.getenv(VERBOSE_ENV_VAR, "").lower() in ("1", "true", "yes")
    return logging.INFO if verbose else logging.WARNING
