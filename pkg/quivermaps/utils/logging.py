"""Logging helpers."""

from __future__ import annotations

import logging
import sys

from quivermaps.config import get_logging_config


def setup_logging() -> logging.Logger:
    logger = logging.getLogger("quivermaps")
    if logger.handlers:
        return logger

    logger.setLevel(get_logging_config()["level"])
    # stdout carries CSV/JSON payloads
    handler = logging.StreamHandler(sys.stderr)
    formatter = logging.Formatter("%(asctime)s | %(levelname)s | %(message)s")
    handler.setFormatter(formatter)
    logger.addHandler(handler)
    logger.propagate = False
    return logger
