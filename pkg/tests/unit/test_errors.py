"""Tests for the exception hierarchy."""

from __future__ import annotations

from fractions import Fraction

import pytest

from birkhoff_gm.errors import (
    BirkhoffError,
    ConfigurationError,
    DegeneracyHazardError,
    DimensionMismatchError,
    GraphParseError,
    HypothesisViolationError,
    IntegralityViolationError,
    InvalidDeltaError,
    InvalidDimensionError,
    InvalidGraphError,
    NotABasisError,
    NotAVertexError,
    PerturbationRangeError,
    ReportRenderError,
    SizeLimitError,
)


class TestBirkhoffError:
    """Tests for the base error."""

    def test_message_and_details(self) -> None:
        """Test message, details and cause are kept."""
        cause = ValueError("inner")
        error = BirkhoffError("outer", details={"k": 1}, cause=cause)

        assert error.message == "outer"
        assert error.details == {"k": 1}
        assert str(error) == "outer (caused by: inner)"

    def test_without_cause(self) -> None:
        """Test the plain string form."""
        assert str(BirkhoffError("plain")) == "plain"
        assert BirkhoffError("plain").details == {}

    @pytest.mark.parametrize(
        "error_type",
        [
            ConfigurationError,
            DegeneracyHazardError,
            GraphParseError,
            HypothesisViolationError,
            InvalidGraphError,
            NotABasisError,
            NotAVertexError,
        ],
    )
    def test_message_errors_are_domain_errors(self, error_type: type[BirkhoffError]) -> None:
        """Test every message-style error derives from BirkhoffError."""
        with pytest.raises(BirkhoffError):
            raise error_type("boom")


class TestStructuredErrors:
    """Tests for errors that build their own messages."""

    def test_configuration_error_details(self) -> None:
        """Test key, expected and actual land in details."""
        error = ConfigurationError("bad", config_key="t", expected="(0, 1)", actual="2")

        assert error.details == {"config_key": "t", "expected": "(0, 1)", "actual": "2"}

    def test_invalid_dimension(self) -> None:
        """Test the minimum is reported."""
        error = InvalidDimensionError(1)

        assert error.n == 1
        assert "n >= 2" in str(error)

    def test_dimension_mismatch(self) -> None:
        """Test expected and actual sizes are reported."""
        error = DimensionMismatchError(3, 4, what="second graph")

        assert error.details == {"expected": 3, "actual": 4, "what": "second graph"}

    def test_perturbation_range(self) -> None:
        """Test the interval is named in the message."""
        error = PerturbationRangeError(Fraction(1, 2), 3)

        assert "(0, 1/3)" in str(error)
        assert error.details["t"] == "1/2"

    def test_invalid_delta(self) -> None:
        """Test the rejected radius is kept."""
        assert InvalidDeltaError(Fraction(3, 2)).details == {"delta": "3/2"}

    def test_integrality_violation(self) -> None:
        """Test the column and value are reported."""
        error = IntegralityViolationError(4, Fraction(1, 2))

        assert error.index == 4
        assert "x[4]=1/2" in str(error)

    def test_size_limit(self) -> None:
        """Test the limit is reported."""
        error = SizeLimitError(11, 10)

        assert error.details == {"n": 11, "limit": 10}

    def test_graph_parse_prefix(self) -> None:
        """Test source and line form the message prefix."""
        error = GraphParseError("bad row", line=3, source="g.txt")

        assert str(error) == "g.txt:3: bad row"
        assert error.details == {"line": 3, "source": "g.txt"}

    def test_report_render_error_keeps_cause(self) -> None:
        """Test the underlying exception is attached."""
        cause = KeyError("x")
        error = ReportRenderError("match", cause)

        assert error.cause is cause
        assert error.details == {"template": "match"}
