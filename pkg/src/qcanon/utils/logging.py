import logging
import sys
from typing import Optional, TextIO

from pythonjsonlogger.json import JsonFormatter

from qcanon.config.settings import Settings

PACKAGE_LOGGER = "qcanon"
TEXT_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"

_HANDLER_NAME = "qcanon-diagnostics"


def _formatter(json: bool) -> logging.Formatter:
    if json:
        return JsonFormatter(
            "%(asctime)s %(levelname)s %(name)s %(message)s",
            rename_fields={"levelname": "level", "name": "logger"},
        )
    return logging.Formatter(fmt=TEXT_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")


def setup_logging(
    level: str = "WARNING", *, json: bool = False, stream: Optional[TextIO] = None
) -> logging.Handler:
    """
    Attach the diagnostics handler to the package logger.

    Diagnostics go to stderr (or `stream`); stdout is reserved for results.
    Calling again replaces the previous handler, so one process can switch
    level or format between CLI invocations.
    """
    package_logger = logging.getLogger(PACKAGE_LOGGER)
    for existing in list(package_logger.handlers):
        if existing.get_name() == _HANDLER_NAME:
            package_logger.removeHandler(existing)

    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(_formatter(json))

    package_logger.addHandler(handler)
    package_logger.setLevel(getattr(logging, level.upper(), logging.WARNING))
    return handler


def setup_logging_from_settings(settings: Settings) -> logging.Handler:
    return setup_logging(settings.log_level, json=settings.log_json)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    return logging.getLogger(name or PACKAGE_LOGGER)
