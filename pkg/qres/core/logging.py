"""
Logging setup. Logs go to stderr so stdout carries only JSON or DOT.
"""
import logging
import logging.config
from typing import Optional

from qres.core.config import settings


def configure_logging(level: Optional[str] = None) -> None:
    """
    Configure the root ``qres`` logger from settings.

    Args:
        level: Optional level name overriding ``settings.LOG_LEVEL``
    """
    logging.config.dictConfig({
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "default": {"format": settings.LOG_FORMAT},
        },
        "handlers": {
            "stderr": {
                "class": "logging.StreamHandler",
                "formatter": "default",
                "stream": "ext://sys.stderr",
            },
        },
        "loggers": {
            "qres": {
                "handlers": ["stderr"],
                "level": (level or settings.LOG_LEVEL).upper(),
                "propagate": False,
            },
        },
    })
