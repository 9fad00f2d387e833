"""Custom exception hierarchy for birkhoff-gm."""

from __future__ import annotations

from typing import Any


class BirkhoffError(Exception):
    """Base exception for all birkhoff-gm errors.

    All custom exceptions in this package inherit from this class,
    allowing callers (and the CLI) to catch every domain error at once.
    """

    def __init__(
        self,
        message: str,
        *,
        details: dict[str, Any] | None = None,
        cause: Exception | None = None,
    ) -> None:
        """Initialize the error.

        Args:
            message: Human-readable error message.
            details: Additional error context.
            cause: Original exception that caused this error.
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}
        self.cause = cause

    def __str__(self) -> str:
        """Return string representation."""
        if self.cause:
            return f"{self.message} (caused by: {self.cause})"
        return self.message


class ConfigurationError(BirkhoffError):
    """Error in settings or solver options.

    Raised when configuration is invalid, missing required fields,
    or contains incompatible settings.
    """

    def __init__(
        self,
        message: str,
        *,
        config_key: str | None = None,
        expected: Any = None,
        actual: Any = None,
        **kwargs: Any,
    ) -> None:
        """Initialize configuration error.

        Args:
            message: Error message.
            config_key: The configuration key that caused the error.
            expected: Expected value or type.
            actual: Actual value received.
            **kwargs: Additional arguments passed to BirkhoffError.
        """
        details = kwargs.pop("details", {})
        if config_key:
            details["config_key"] = config_key
        if expected is not None:
            details["expected"] = expected
        if actual is not None:
            details["actual"] = actual

        super().__init__(message, details=details, **kwargs)
        self.config_key = config_key
        self.expected = expected
        self.actual = actual


class InvalidDimensionError(BirkhoffError):
    """Assignment side length is too small to describe a matching."""

    def __init__(self, n: int, *, minimum: int = 2, **kwargs: Any) -> None:
        """Initialize invalid dimension error.

        Args:
            n: The rejected side length.
            minimum: Smallest accepted side length.
            **kwargs: Additional arguments passed to BirkhoffError.
        """
        details = kwargs.pop("details", {})
        details.update({"n": n, "minimum": minimum})
        super().__init__(f"Invalid dimension n={n}: need n >= {minimum}", details=details, **kwargs)
        self.n = n
        self.minimum = minimum


class DimensionMismatchError(BirkhoffError):
    """Two inputs that must share a side length do not."""

    def __init__(self, expected: int, actual: int, *, what: str = "input", **kwargs: Any) -> None:
        """Initialize dimension mismatch error.

        Args:
            expected: Expected side length.
            actual: Side length received.
            what: Name of the offending input.
            **kwargs: Additional arguments passed to BirkhoffError.
        """
        details = kwargs.pop("details", {})
        details.update({"expected": expected, "actual": actual, "what": what})
        super().__init__(
            f"Dimension mismatch for {what}: expected {expected}, got {actual}",
            details=details,
            **kwargs,
        )
        self.expected = expected
        self.actual = actual


class PerturbationRangeError(BirkhoffError):
    """Perturbation magnitude lies outside the open interval (0, 1/n)."""

    def __init__(self, t: Any, n: int, **kwargs: Any) -> None:
        """Initialize perturbation range error.

        Args:
            t: The rejected perturbation.
            n: Side length of the assignment.
            **kwargs: Additional arguments passed to BirkhoffError.
        """
        details = kwargs.pop("details", {})
        details.update({"t": str(t), "n": n, "upper": f"1/{n}"})
        super().__init__(
            f"Perturbation t={t} outside the non-degeneracy interval (0, 1/{n})",
            details=details,
            **kwargs,
        )
        self.t = t
        self.n = n


class InvalidDeltaError(BirkhoffError):
    """Continuity radius outside the open interval (0, 1)."""

    def __init__(self, delta: Any, **kwargs: Any) -> None:
        """Initialize invalid delta error.

        Args:
            delta: The rejected radius.
            **kwargs: Additional arguments passed to BirkhoffError.
        """
        details = kwargs.pop("details", {})
        details["delta"] = str(delta)
        super().__init__(f"delta={delta} must lie strictly between 0 and 1", details=details, **kwargs)
        self.delta = delta


class NotABasisError(BirkhoffError):
    """Selected columns do not form a nonsingular basis."""

    def __init__(self, message: str, *, columns: tuple[int, ...] | None = None, **kwargs: Any) -> None:
        """Initialize not-a-basis error.

        Args:
            message: Error message.
            columns: Column indices that were rejected.
            **kwargs: Additional arguments passed to BirkhoffError.
        """
        details = kwargs.pop("details", {})
        if columns is not None:
            details["columns"] = list(columns)
        super().__init__(message, details=details, **kwargs)
        self.columns = columns


class NotAVertexError(BirkhoffError):
    """Values are not a 0/1 permutation matrix."""

    pass


class HypothesisViolationError(BirkhoffError):
    """A sensitivity trial violates its perturbation-size hypothesis."""

    def __init__(
        self,
        message: str,
        *,
        index: int | None = None,
        limit: Any = None,
        **kwargs: Any,
    ) -> None:
        """Initialize hypothesis violation error.

        Args:
            message: Error message.
            index: Offending component of the perturbation.
            limit: The strict bound that was reached or exceeded.
            **kwargs: Additional arguments passed to BirkhoffError.
        """
        details = kwargs.pop("details", {})
        if index is not None:
            details["index"] = index
        if limit is not None:
            details["limit"] = str(limit)
        super().__init__(message, details=details, **kwargs)
        self.index = index
        self.limit = limit


class IntegralityViolationError(BirkhoffError):
    """A basic solution of an integral system has a fractional component.

    Raised as an internal consistency check: total unimodularity and
    Cramer's rule make this impossible for a correct solve.
    """

    def __init__(self, index: int, value: Any, **kwargs: Any) -> None:
        """Initialize integrality violation error.

        Args:
            index: Column index of the fractional component.
            value: The fractional value.
            **kwargs: Additional arguments passed to BirkhoffError.
        """
        details = kwargs.pop("details", {})
        details.update({"index": index, "value": str(value)})
        super().__init__(
            f"Non-integer component x[{index}]={value} in an integral basic solution",
            details=details,
            **kwargs,
        )
        self.index = index
        self.value = value


class DegeneracyHazardError(BirkhoffError):
    """The solver was handed a degenerate (unperturbed) polytope."""

    pass


class SizeLimitError(BirkhoffError):
    """Exhaustive search requested beyond its tractable size."""

    def __init__(self, n: int, limit: int, **kwargs: Any) -> None:
        """Initialize size limit error.

        Args:
            n: Requested size.
            limit: Largest accepted size.
            **kwargs: Additional arguments passed to BirkhoffError.
        """
        details = kwargs.pop("details", {})
        details.update({"n": n, "limit": limit})
        super().__init__(f"n={n} exceeds the exhaustive-search limit {limit}", details=details, **kwargs)
        self.n = n
        self.limit = limit


class InvalidGraphError(BirkhoffError):
    """Adjacency data does not describe a simple undirected graph."""

    pass


class GraphParseError(BirkhoffError):
    """Graph input is malformed."""

    def __init__(
        self,
        message: str,
        *,
        line: int | None = None,
        source: str | None = None,
        **kwargs: Any,
    ) -> None:
        """Initialize graph parse error.

        Args:
            message: Error message.
            line: 1-indexed line number of the problem, if known.
            source: Name of the input (file path or "<text>").
            **kwargs: Additional arguments passed to BirkhoffError.
        """
        details = kwargs.pop("details", {})
        if line is not None:
            details["line"] = line
        if source:
            details["source"] = source
        prefix = f"{source or '<text>'}"
        if line is not None:
            prefix = f"{prefix}:{line}"
        super().__init__(f"{prefix}: {message}", details=details, **kwargs)
        self.line = line
        self.source = source


class ReportRenderError(BirkhoffError):
    """A report template failed to render."""

    def __init__(self, name: str, cause: Exception) -> None:
        """Initialize the error.

        Args:
            name: Template name that failed to render.
            cause: The underlying exception.
        """
        super().__init__(f"Failed to render report '{name}'", details={"template": name}, cause=cause)
        self.name = name
