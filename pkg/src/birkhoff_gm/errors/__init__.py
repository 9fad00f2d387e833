"""Error hierarchy."""

from birkhoff_gm.errors.exceptions import (
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

__all__ = [
    "BirkhoffError",
    "ConfigurationError",
    "DegeneracyHazardError",
    "DimensionMismatchError",
    "GraphParseError",
    "HypothesisViolationError",
    "IntegralityViolationError",
    "InvalidDeltaError",
    "InvalidDimensionError",
    "InvalidGraphError",
    "NotABasisError",
    "NotAVertexError",
    "PerturbationRangeError",
    "ReportRenderError",
    "SizeLimitError",
]
