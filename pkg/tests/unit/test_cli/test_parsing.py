"""Tests for graph file parsing."""

from __future__ import annotations

from pathlib import Path

import pytest

from birkhoff_gm.cli.parsing import load_graph, parse_graph
from birkhoff_gm.errors import GraphParseError
from birkhoff_gm.objective import AdjacencyMatrix


class TestParseGraph:
    """Tests for parse_graph."""

    def test_matrix_format(self, k3: AdjacencyMatrix) -> None:
        """Test a compact 0/1 matrix."""
        assert parse_graph("3\n011\n101\n110\n") == k3

    def test_spaced_matrix_with_comments(self, p3: AdjacencyMatrix) -> None:
        """Test separators, comments and blank lines are ignored."""
        text = "# path\n3\n\n0 1 0  # row one\n1 0 1\n0 1 0\n"

        assert parse_graph(text) == p3

    def test_edge_list(self, p3: AdjacencyMatrix) -> None:
        """Test a 1-indexed edge list."""
        assert parse_graph("n=3\n1 2\n2 3\n") == p3

    def test_edge_list_repeats_and_reversals(self, p3: AdjacencyMatrix) -> None:
        """Test duplicate and reversed edges collapse."""
        assert parse_graph("N = 3\n1 2\n2 1\n3 2\n") == p3

    def test_edge_list_without_edges(self, edgeless3: AdjacencyMatrix) -> None:
        """Test a header alone is an empty graph."""
        assert parse_graph("n=3\n") == edgeless3

    @pytest.mark.parametrize(
        ("text", "line", "fragment"),
        [
            ("n=2\n1 1\n", 2, "self-loop"),
            ("n=3\n1 4\n", 2, "outside"),
            ("n=3\n1 2 3\n", 2, "expected 'u v'"),
            ("3\n011\n101\n", 3, "expected 3 matrix rows"),
            ("3\n011\n10\n110\n", 3, "row has 2 entries"),
            ("3\n012\n101\n110\n", 2, "non-binary"),
            ("2\n11\n10\n", 2, "self-loop"),
            ("3\n010\n001\n010\n", 2, "asymmetric"),
            ("three\n", 1, "vertex count"),
        ],
    )
    def test_errors_carry_line_numbers(self, text: str, line: int, fragment: str) -> None:
        """Test malformed input is reported with the offending line."""
        with pytest.raises(GraphParseError, match=fragment) as exc_info:
            parse_graph(text, source="g.txt")

        assert exc_info.value.line == line
        assert str(exc_info.value).startswith(f"g.txt:{line}: ")

    def test_empty_input(self) -> None:
        """Test a file of comments only is rejected."""
        with pytest.raises(GraphParseError, match="empty"):
            parse_graph("# nothing\n\n")


class TestLoadGraph:
    """Tests for load_graph."""

    def test_reads_files(self, graph_files: dict[str, Path], k3: AdjacencyMatrix, p3: AdjacencyMatrix) -> None:
        """Test both formats load from disk."""
        assert load_graph(graph_files["k3"]) == k3
        assert load_graph(str(graph_files["p3"])) == p3

    def test_missing_file(self, tmp_path: Path) -> None:
        """Test a missing file becomes a parse error naming the path."""
        missing = tmp_path / "absent.txt"

        with pytest.raises(GraphParseError) as exc_info:
            load_graph(missing)

        assert exc_info.value.source == str(missing)
