"""Exhaustive permutation search for graph matching."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from birkhoff_gm.errors import BirkhoffError, DimensionMismatchError, SizeLimitError
from birkhoff_gm.objective.graph import AdjacencyMatrix
from birkhoff_gm.oracle.config import ORACLE_HARD_LIMIT
from birkhoff_gm.polytope import Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleResult:
    """Ground truth for a graph pair.

    Attributes:
        best_sigma: Lexicographically first optimal permutation.
        min_symdiff: Smallest edge symmetric difference.
        max_qform: Largest quadratic form, twice the common edge count.
        optimal_count: Number of optimal permutations.
    """

    best_sigma: Permutation
    min_symdiff: int
    max_qform: int
    optimal_count: int


def oracle_gm(
    e1: AdjacencyMatrix,
    e2: AdjacencyMatrix,
    max_n: int = ORACLE_HARD_LIMIT,
) -> OracleResult:
    """Search all n! permutations in lexicographic order.

    For every permutation the disagreement count and the common edge count
    are tallied separately and checked against
    ``symdiff = |E1| + |E2| - 2 * common``.

    Args:
        e1: Graph relabelled by each permutation.
        e2: Target graph.
        max_n: Largest order searched (never above the hard limit).

    Returns:
        The oracle result.

    Raises:
        DimensionMismatchError: If the orders differ.
        SizeLimitError: If n exceeds the limit.
    """
    if e1.n != e2.n:
        raise DimensionMismatchError(e1.n, e2.n, what="second graph")
    n = e1.n
    limit = min(max_n, ORACLE_HARD_LIMIT)
    if n > limit:
        raise SizeLimitError(n, limit)

    a = e1.to_rows()
    b = e2.to_rows()
    pairs = list(itertools.combinations(range(n), 2))
    total_edges = e1.edge_count() + e2.edge_count()

    best: tuple[int, ...] | None = None
    best_common = -1
    count = 0
    for sigma in itertools.permutations(range(n)):
        common = 0
        disagreements = 0
        for i, j in pairs:
            u, v = a[i][j], b[sigma[i]][sigma[j]]
            common += u & v
            disagreements += u ^ v
        if disagreements != total_edges - 2 * common:
            raise BirkhoffError(
                "symmetric difference disagrees with the common-edge count",
                details={"sigma": [s + 1 for s in sigma]},
            )
        if common > best_common:
            best, best_common, count = sigma, common, 1
        elif common == best_common:
            count += 1

    assert best is not None
    result = OracleResult(
        best_sigma=Permutation.from_zero_based(best),
        min_symdiff=total_edges - 2 * best_common,
        max_qform=2 * best_common,
        optimal_count=count,
    )
    logger.debug(
        "oracle finished",
        extra={"n": n, "min_symdiff": result.min_symdiff, "optimal_count": count},
    )
    return result


def relabel_invariance(e1: AdjacencyMatrix, e2: AdjacencyMatrix, pi: Permutation) -> bool:
    """Check the optimum values survive relabelling both graphs by ``pi``."""
    before = oracle_gm(e1, e2)
    after = oracle_gm(e1.relabel(pi), e2.relabel(pi))
    return (
        before.min_symdiff == after.min_symdiff
        and before.max_qform == after.max_qform
        and before.optimal_count == after.optimal_count
    )
