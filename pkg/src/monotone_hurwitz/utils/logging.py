"""Logging setup: stdlib loggers rendered through rich on stderr."""

import logging

from rich.console import Console
from rich.logging import RichHandler

_CONFIGURED = False


def setup_logging(level: str = "WARNING") -> None:
    """
    Configure the package logger once.

    Args:
        level: Level name such as "DEBUG" or "INFO"
    """
    global _CONFIGURED
    package_logger = logging.getLogger("monotone_hurwitz")
    package_logger.setLevel(level.upper())
    if _CONFIGURED:
        return
    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=True
    )
    handler.setFormatter(logging.Formatter("%(message)s"))
    package_logger.addHandler(handler)
    package_logger.propagate = False
    _CONFIGURED = True
