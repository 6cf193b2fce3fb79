"""
Logging setup for the verifier.

Library modules only create child loggers of "QBrauer"; handlers are attached once by
configure_logging, which the command line front end calls.
"""
import logging
import os
from datetime import datetime
from typing import Any, Dict, Optional

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

logger = logging.getLogger("QBrauer")


def log_file_path(log_dir: str) -> str:
    return os.path.join(log_dir, f"qbrauer_{datetime.now().strftime('%Y-%m-%d')}.log")


def configure_logging(log_dir: Optional[str] = None, verbose: bool = False) -> logging.Logger:
    """Attach a stream handler and, when log_dir is given, a dated file handler"""
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(LOG_FORMAT)
    stream = logging.StreamHandler()
    stream.setFormatter(formatter)
    stream.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.addHandler(stream)

    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(log_file_path(log_dir))
        file_handler.setFormatter(formatter)
        file_handler.setLevel(logging.DEBUG if verbose else logging.INFO)
        logger.addHandler(file_handler)

    logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    logger.propagate = False
    return logger


def log_info(message: str):
    logger.info(message)


def log_warning(message: str):
    logger.warning(message)


def log_error(message: str):
    logger.error(message)


def log_debug(message: str):
    logger.debug(message)


def log_event(event_type: str, data: Dict[str, Any]):
    """Structured one-line event, e.g. log_event("GRID", {"cells": 12})"""
    logger.info(f"[{event_type}] {data}")


__all__ = [
    "logger", "configure_logging", "log_file_path",
    "log_info", "log_warning", "log_error", "log_debug", "log_event",
]
