"""
loguru sinks for the twuality CLI and census runs.

The library modules only call ``loguru.logger``; sinks are added here, once,
from the CLI entry point. Console output goes to stderr since stdout carries
graphs and census records.
"""

import os
import sys
from pathlib import Path
from typing import Optional, Union

from loguru import logger
from pydantic import ValidationError

from src.config.settings import LoggingSettings, get_logging_config

DEFAULT_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - "
    "<level>{message}</level>"
)

DEFAULT_LOG_FILE = Path("logs") / "twuality.log"


def setup_logging(
    log_level: str = "INFO",
    log_file: Optional[Union[str, Path]] = None,
    enable_console: bool = True,
    enable_file: bool = False,
    rotation: str = "10 MB",
    retention: str = "30 days",
    format_string: Optional[str] = None,
) -> None:
    """
    Replace all loguru sinks.

    Args:
        log_level: DEBUG, INFO, WARNING, ERROR or CRITICAL
        log_file: Path of the file sink, logs/twuality.log when omitted
        enable_console: Add the stderr sink
        enable_file: Add the file sink
        rotation: loguru rotation, e.g. "10 MB" or "00:00"
        retention: loguru retention, e.g. "30 days"
        format_string: loguru format for both sinks
    """
    logger.remove()
    level = log_level.upper()
    format_string = format_string or DEFAULT_FORMAT

    if enable_console:
        logger.add(
            sys.stderr,
            format=format_string,
            level=level,
            colorize=True,
            backtrace=True,
            diagnose=False,
        )

    if enable_file:
        path = Path(log_file) if log_file else DEFAULT_LOG_FILE
        path.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            str(path),
            format=format_string,
            level=level,
            rotation=rotation,
            retention=retention,
            compression="zip",
            backtrace=True,
            diagnose=False,
            enqueue=True,  # census workers log from other processes
        )
        logger.debug(f"Log file: {path.resolve()}")

    logger.debug(f"Logging initialized with level: {level}")


def setup_logging_from_config(config: LoggingSettings) -> None:
    setup_logging(
        log_level=config.log_level,
        log_file=config.log_file,
        enable_console=config.log_console,
        enable_file=config.log_file_enabled,
        rotation=config.log_rotation,
        retention=config.log_retention,
    )


def get_logger(name: Optional[str] = None):
    """Logger with ``name`` bound as extra, or the global logger."""
    return logger.bind(name=name) if name else logger


def setup_logging_from_env() -> None:
    """
    Configure sinks from the pydantic settings.

    A settings error falls back to a console-only INFO setup and is
    reported as a warning on that sink.
    """
    try:
        config = get_logging_config()
    except ValidationError as e:
        setup_logging(
            log_level="INFO",
            enable_console=os.getenv("LOG_CONSOLE", "true").lower() == "true",
            enable_file=False,
        )
        logger.warning(f"Invalid logging settings ({e.error_count()} error(s)); using defaults")
        return
    setup_logging_from_config(config)
    logger.debug("Logging configured from settings")
