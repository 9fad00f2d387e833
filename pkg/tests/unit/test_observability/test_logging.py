"""Tests for structured logging."""

from __future__ import annotations

import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from birkhoff_gm.config import LoggingConfig
from birkhoff_gm.observability import StructuredFormatter, StructuredLogger, setup_logging


def _record(**extra: object) -> logging.LogRecord:
    record = logging.LogRecord("birkhoff_gm.solver", logging.INFO, __file__, 1, "new incumbent", None, None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


class TestStructuredFormatter:
    """Tests for StructuredFormatter."""

    def test_json_line(self) -> None:
        """Test the base fields of a structured line."""
        data = json.loads(StructuredFormatter().format(_record()))

        assert data["level"] == "INFO"
        assert data["logger"] == "birkhoff_gm.solver"
        assert data["message"] == "new incumbent"
        assert "extra" not in data

    def test_extras_write_fractions_as_p_over_q(self) -> None:
        """Test exact values are written as p/q strings."""
        data = json.loads(StructuredFormatter().format(_record(value=Fraction(37, 2), basis=[0, 4, 8])))

        assert data["extra"] == {"value": "37/2", "basis": [0, 4, 8]}

    def test_extras_can_be_dropped(self) -> None:
        """Test include_extras=False omits context."""
        data = json.loads(StructuredFormatter(include_extras=False).format(_record(value=1)))

        assert "extra" not in data

    def test_exception_included(self) -> None:
        """Test tracebacks are attached."""
        try:
            raise RuntimeError("boom")
        except RuntimeError:
            record = logging.LogRecord("x", logging.ERROR, __file__, 1, "failed", None, sys.exc_info())

        data = json.loads(StructuredFormatter().format(record))

        assert "RuntimeError: boom" in data["exception"]


class TestSetupLogging:
    """Tests for setup_logging."""

    def test_defaults(self) -> None:
        """Test a warning-level stderr handler."""
        logger = setup_logging()

        assert isinstance(logger, StructuredLogger)
        assert logger.logger.level == logging.WARNING
        assert len(logger.logger.handlers) == 1
        assert isinstance(logger.logger.handlers[0], logging.StreamHandler)

    def test_replaces_handlers(self) -> None:
        """Test repeated setup does not stack handlers."""
        setup_logging()
        logger = setup_logging(LoggingConfig(level="DEBUG"))

        assert len(logger.logger.handlers) == 1
        assert logger.logger.level == logging.DEBUG

    def test_structured_file(self, tmp_path: Path) -> None:
        """Test keyword context reaches a JSON log file."""
        path = tmp_path / "solve.log"
        logger = setup_logging(LoggingConfig(level="INFO", structured=True, file=path))

        logger.info("surrogate verified", t="1/3000", equivalent=True)
        for handler in logger.logger.handlers:
            handler.flush()

        data = json.loads(path.read_text().strip())
        assert data["message"] == "surrogate verified"
        assert data["extra"] == {"t": "1/3000", "equivalent": True}

    def test_structured_logger_levels(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test each level method reaches the underlying logger."""
        logger = StructuredLogger(logging.getLogger("birkhoff_gm.test"))

        with caplog.at_level(logging.DEBUG, logger="birkhoff_gm.test"):
            logger.debug("d", step=1)
            logger.warning("w")
            logger.error("e")

        assert [r.levelname for r in caplog.records] == ["DEBUG", "WARNING", "ERROR"]
        assert caplog.records[0].step == 1

    def test_bind_adds_context(self, caplog: pytest.LogCaptureFixture) -> None:
        """Test bound context is merged into every record."""
        base = StructuredLogger(logging.getLogger("birkhoff_gm.test"))
        bound = base.bind(command="match").bind(n=3)

        with caplog.at_level(logging.INFO, logger="birkhoff_gm.test"):
            bound.info("solved", t="1/3000")

        record = caplog.records[0]
        assert (record.command, record.n, record.t) == ("match", 3, "1/3000")
        assert base.context == {}
        assert bound.context == {"command": "match", "n": 3}

    def test_numpy_values_are_plain_json(self) -> None:
        """Test numpy scalars and arrays in extras serialize as numbers and lists."""
        data = json.loads(StructuredFormatter().format(_record(count=np.int64(6), row=np.array([1, 0]))))

        assert data["extra"] == {"count": 6, "row": [1, 0]}
