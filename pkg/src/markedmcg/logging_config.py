"""
Logging configuration for markedmcg.

Every module logs through ``get_logger(__name__)``, which places it under the
``markedmcg`` logger. The command-line front-end calls ``setup_logging`` once;
records go to stderr so that the reports printed on stdout stay byte-identical
between runs.
"""

import logging
import sys
import time
from contextlib import contextmanager
from typing import Iterator, Optional, TextIO

ROOT_LOGGER = "markedmcg"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(log_level: str = "WARNING", stream: Optional[TextIO] = None) -> logging.Logger:
    """
    Configure the root handler and the level of the ``markedmcg`` logger.

    Args:
        log_level: The logging level as a string (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        stream: Where records are written, stderr by default

    Returns:
        The ``markedmcg`` logger
    """
    numeric_level = getattr(logging, log_level.upper(), logging.WARNING)

    logging.basicConfig(
        level=numeric_level,
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(stream or sys.stderr)],
        force=True,
    )

    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(numeric_level)
    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get the logger of a module.

    Args:
        name: Typically ``__name__``; only its last dotted part is kept, so
            ``markedmcg.suites.braid`` logs as ``markedmcg.braid``

    Returns:
        Logger instance
    """
    if name:
        return logging.getLogger(f'{ROOT_LOGGER}.{name.split(".")[-1]}')
    return logging.getLogger(ROOT_LOGGER)


@contextmanager
def log_duration(
    logger: logging.Logger, what: str, level: int = logging.DEBUG
) -> Iterator[None]:
    """Log how long the body took, also when it raises."""
    start_time = time.perf_counter()
    try:
        yield
    finally:
        logger.log(level, f"{what} took {time.perf_counter() - start_time:.3f} seconds")
