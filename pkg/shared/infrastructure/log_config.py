"""
Logging initialization for Orlik Scan

Sets up one stderr handler for the whole process. Library modules only call
``logging.getLogger(__name__)``; the entry point decides the level.
"""
import logging

from shared.infrastructure.settings import LOG_LEVEL

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def init_logging(verbosity: int = 0) -> None:
    """
    Initialize process-wide logging.

    Args:
        verbosity: 0 keeps the configured level, 1 forces INFO, 2 or more DEBUG.
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, LOG_LEVEL, logging.WARNING)

    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
    logging.getLogger(__name__).debug("Logging initialized at %s", logging.getLevelName(level))
