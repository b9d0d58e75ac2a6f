"""Logging configuration and utilities."""

import logging
import os
from datetime import datetime

__all__ = [
    "setup_logging",
    "get_logger",
    "summarize_matrix",
    "extract_stats",
    "format_check_log",
]


def setup_logging() -> None:
    """Configure logging based on LOG_LEVEL environment variable.

    Valid levels: DEBUG, INFO, WARNING, ERROR (default: INFO)
    """
    level_name = os.environ.get("LOG_LEVEL", "INFO").upper()
    level = getattr(logging, level_name, None)

    if not isinstance(level, int):
        level = logging.INFO

    logger = logging.getLogger("artin_homology")
    logger.setLevel(level)
    logger.propagate = False  # Prevent duplicate logs to root logger

    # Only add handler if not already configured
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)


def summarize_matrix(presentation) -> str:
    """Short label for a presentation: generator count and |B|.

    Accepts None for commands that run without a matrix.
    """
    if presentation is None:
        return "-"
    return f"n={presentation.n} |B|={len(presentation.B)}"


def extract_stats(command: str, result: dict) -> str:
    """Extract meaningful stats from a command result."""
    if command in ("h1", "h2"):
        if "rank" in result:
            return f"rank {result['rank']}"
        if "invariants" in result:
            return result["invariants"]

    if command == "cup":
        count = len(result.get("entries", []))
        return f"{count} entries"

    if command == "pontryagin":
        count = len(result.get("pairs", []))
        return f"{count} pairs"

    if command == "class":
        count = len(result.get("factors", []))
        return f"{count} factors"

    if command == "verify":
        checks = result.get("checks", [])
        failed = sum(1 for c in checks if c.get("status") == "failed")
        return f"{len(checks)} checks, {failed} failed"

    if command == "oracle-h2":
        if "order" in result:
            return f"order {result['order']}"

    if command == "validate":
        return f"n={result.get('n', '?')}"

    return "-"


def format_check_log(
    command: str,
    matrix: str,
    check: str | None,
    stats: str,
    status: str,
    duration_ms: int,
    error_message: str | None = None,
) -> str:
    """Format a command or check log line.

    Format: YYYY-MM-DD HH:MM:SS | command | matrix | check | stats | status | duration
    """
    timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
    check_name = check if check else "-"

    line = f"{timestamp} | {command} | {matrix} | {check_name} | {stats} | {status} | {duration_ms}ms"

    if error_message:
        line += f"\n    {error_message}"

    return line


def get_logger(name: str) -> logging.Logger:
    """Get a child logger under the artin_homology namespace."""
    return logging.getLogger(f"artin_homology.{name}")
