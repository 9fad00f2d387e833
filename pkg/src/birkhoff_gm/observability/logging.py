"""Logging setup for solver runs.

Library modules log through ``logging.getLogger(__name__)`` and pass context
with ``extra=``. ``setup_logging`` is called once by the CLI; it attaches a
single handler to the ``birkhoff_gm`` logger and optionally switches it to
JSON lines.
"""

from __future__ import annotations

import json
import logging
import sys
from fractions import Fraction
from typing import Any

import numpy as np

from birkhoff_gm._internal.rational import format_fraction
from birkhoff_gm.config.logging_config import LoggingConfig

PLAIN_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"

# Attributes every LogRecord carries; anything else arrived through ``extra``.
_RECORD_ATTRS = frozenset(logging.LogRecord("", 0, "", 0, "", None, None).__dict__) | {
    "message",
    "asctime",
}


def _to_json(value: Any) -> Any:
    """Fallback encoder: exact rationals as ``"p/q"``, numpy scalars and arrays as plain data."""
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    return str(value)


class StructuredFormatter(logging.Formatter):
    """One JSON object per record, with ``extra`` context under ``"extra"``.

    Args:
        include_extras: Attach the record's ``extra`` fields.
    """

    def __init__(self, include_extras: bool = True) -> None:
        super().__init__()
        self.include_extras = include_extras

    def format(self, record: logging.LogRecord) -> str:
        payload: dict[str, Any] = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        if self.include_extras:
            context = {
                key: value
                for key, value in record.__dict__.items()
                if key not in _RECORD_ATTRS and not key.startswith("_")
            }
            if context:
                payload["extra"] = context
        return json.dumps(payload, default=_to_json)


class StructuredLogger:
    """Logger facade taking context as keyword arguments.

    ``bind`` returns a copy that adds fixed context (such as the subcommand)
    to every record.
    """

    def __init__(self, logger: logging.Logger, context: dict[str, Any] | None = None) -> None:
        self._logger = logger
        self._context = dict(context or {})

    @property
    def logger(self) -> logging.Logger:
        return self._logger

    @property
    def context(self) -> dict[str, Any]:
        return dict(self._context)

    def bind(self, **context: Any) -> StructuredLogger:
        return StructuredLogger(self._logger, {**self._context, **context})

    def debug(self, msg: str, **context: Any) -> None:
        self._emit(logging.DEBUG, msg, context)

    def info(self, msg: str, **context: Any) -> None:
        self._emit(logging.INFO, msg, context)

    def warning(self, msg: str, **context: Any) -> None:
        self._emit(logging.WARNING, msg, context)

    def error(self, msg: str, **context: Any) -> None:
        self._emit(logging.ERROR, msg, context)

    def _emit(self, level: int, msg: str, context: dict[str, Any]) -> None:
        self._logger.log(level, msg, extra={**self._context, **context})


def _handler_for(config: LoggingConfig) -> logging.Handler:
    handler: logging.Handler = (
        logging.FileHandler(config.file, encoding="utf-8")
        if config.file
        else logging.StreamHandler(sys.stderr)
    )
    handler.setFormatter(
        StructuredFormatter(include_extras=config.include_extras)
        if config.structured
        else logging.Formatter(PLAIN_FORMAT)
    )
    return handler


def setup_logging(
    config: LoggingConfig | None = None,
    name: str = "birkhoff_gm",
) -> StructuredLogger:
    """Point the package logger at stderr (or a file) at the configured level.

    Calling it again replaces the previous handler.

    Args:
        config: Logging configuration; defaults to WARNING on stderr.
        name: Logger to configure.

    Returns:
        A StructuredLogger over the configured logger.
    """
    config = config or LoggingConfig()
    level = logging.getLevelNamesMapping()[config.level.upper()]

    logger = logging.getLogger(name)
    for old in list(logger.handlers):
        logger.removeHandler(old)
        old.close()
    handler = _handler_for(config)
    handler.setLevel(level)
    logger.addHandler(handler)
    logger.setLevel(level)
    return StructuredLogger(logger)
