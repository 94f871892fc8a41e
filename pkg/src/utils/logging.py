"""Logging configuration for intervalsep.

Records go to stderr; stdout is reserved for solution files, instance files
and bench tables. Loggers live under the ``intervalsep`` namespace and are
named by subpackage, e.g. ``intervalsep.solvers.fast``.
"""

import logging
import sys
from typing import Callable, Optional

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

ROOT_LOGGER_NAME = "intervalsep"


def setup_logging(log_level: Optional[str] = None) -> logging.Logger:
    """Configure the root handler and level once for a CLI run.

    Args:
        log_level: Level name (DEBUG, INFO, WARNING, ERROR). If None, the
            ``LOG_LEVEL`` setting is used.

    Returns:
        The ``intervalsep`` package logger
    """
    if log_level is None:
        from src.utils.settings import get_settings

        log_level = get_settings().log_level
    level = log_level.upper()
    if level == "WARN":
        level = "WARNING"

    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format=LOG_FORMAT,
        datefmt=DATE_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )
    return logging.getLogger(ROOT_LOGGER_NAME)


def get_logger(name: str) -> logging.Logger:
    """Return the logger for a dotted subpackage name such as ``"solvers.fast"``."""
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")


def debug_line_sink(logger: logging.Logger) -> Optional[Callable[[str], None]]:
    """Return a callable that logs each line at DEBUG, or None when DEBUG is off.

    Solvers skip building trace lines entirely when handed None.
    """
    if not logger.isEnabledFor(logging.DEBUG):
        return None

    def sink(line: str) -> None:
        logger.debug(f"step {line}")

    return sink
