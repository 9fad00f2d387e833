"""Command-line interface: graph parsing, pipelines, reports."""

from birkhoff_gm.cli.commands import (
    EXIT_INPUT_ERROR,
    EXIT_ITERATION_LIMIT,
    EXIT_OK,
)
from birkhoff_gm.cli.parsing import load_graph, parse_graph
from birkhoff_gm.cli.reports import (
    BoundsReport,
    MatchReport,
    OracleReport,
    PolytopeReport,
    SweepReport,
    VerifyReport,
)

__all__ = [
    "EXIT_INPUT_ERROR",
    "EXIT_ITERATION_LIMIT",
    "EXIT_OK",
    "BoundsReport",
    "MatchReport",
    "OracleReport",
    "PolytopeReport",
    "SweepReport",
    "VerifyReport",
    "load_graph",
    "parse_graph",
]
