"""Graph file parsing.

Two formats are accepted, both whitespace tolerant, with ``#`` comments and
blank lines ignored:

Matrix format: a line holding n, then n rows of n characters in {0, 1}
(optionally space separated)::

    3
    011
    101
    110

Edge-list format: a header ``n=<k>``, then one ``u v`` pair per line,
1-indexed. Edges are symmetrized; repeats are harmless::

    n=3
    1 2
    2 3
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from birkhoff_gm.errors import GraphParseError, InvalidGraphError
from birkhoff_gm.objective.graph import AdjacencyMatrix

_HEADER = re.compile(r"^n\s*=\s*(\d+)$", re.IGNORECASE)


def _content_lines(text: str) -> list[tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _parse_matrix(lines: list[tuple[int, str]], source: str) -> AdjacencyMatrix:
    header_line, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise GraphParseError(
            f"expected the vertex count or 'n=<k>', got {header!r}",
            line=header_line,
            source=source,
        ) from None
    if n < 1:
        raise GraphParseError(f"vertex count must be positive, got {n}", line=header_line, source=source)
    rows = lines[1:]
    if len(rows) != n:
        last = rows[-1][0] if rows else header_line
        raise GraphParseError(f"expected {n} matrix rows, found {len(rows)}", line=last, source=source)

    entries = np.zeros((n, n), dtype=np.int64)
    for i, (number, line) in enumerate(rows):
        cells = line.replace(" ", "").replace("\t", "")
        if len(cells) != n:
            raise GraphParseError(f"row has {len(cells)} entries, expected {n}", line=number, source=source)
        for j, cell in enumerate(cells):
            if cell not in "01":
                raise GraphParseError(f"non-binary entry {cell!r}", line=number, source=source)
            entries[i, j] = int(cell)
        if entries[i, i]:
            raise GraphParseError(f"self-loop at vertex {i + 1}", line=number, source=source)
    for i, (number, _) in enumerate(rows):
        for j in range(n):
            if entries[i, j] != entries[j, i]:
                raise GraphParseError(
                    f"asymmetric matrix: entry ({i + 1},{j + 1}) differs from ({j + 1},{i + 1})",
                    line=number,
                    source=source,
                )
    return AdjacencyMatrix(entries)


def _parse_edges(n: int, lines: list[tuple[int, str]], source: str) -> AdjacencyMatrix:
    edges: list[tuple[int, int]] = []
    for number, line in lines:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphParseError(f"expected 'u v', got {line!r}", line=number, source=source)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", line=number, source=source)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"vertex outside 1..{n} in {line!r}", line=number, source=source)
        edges.append((u, v))
    try:
        return AdjacencyMatrix.from_edges(n, edges)
    except InvalidGraphError as e:
        raise GraphParseError(e.message, source=source, cause=e) from e


def parse_graph(text: str, source: str = "<text>") -> AdjacencyMatrix:
    """Parse a graph from text in matrix or edge-list format.

    Args:
        text: Graph description.
        source: Name used in error messages.

    Returns:
        The validated adjacency matrix.

    Raises:
        GraphParseError: On any malformed line, with its line number.
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphParseError("empty graph description", source=source)
    header_line, header = lines[0]
    match = _HEADER.match(header)
    if match:
        n = int(match.group(1))
        if n < 1:
            raise GraphParseError("vertex count must be positive", line=header_line, source=source)
        return _parse_edges(n, lines[1:], source)
    return _parse_matrix(lines, source)


def load_graph(path: str | Path) -> AdjacencyMatrix:
    """Read and parse a graph file.

    Raises:
        GraphParseError: If the file is missing or malformed.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GraphParseError(f"cannot read graph file: {e.strerror}", source=str(path), cause=e) from e
    return parse_graph(text, source=str(path))
