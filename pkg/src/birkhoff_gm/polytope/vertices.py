"""Vertex enumeration by pivoting across feasible bases."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterator
from fractions import Fraction

from birkhoff_gm._internal.rational import canonical_form, pivot
from birkhoff_gm.errors import DegeneracyHazardError, DimensionMismatchError
from birkhoff_gm.polytope.basis import Basis, BasicSolution, solve_basis
from birkhoff_gm.polytope.permutation import Permutation
from birkhoff_gm.polytope.system import ConstraintSystem, column_index


def anchor_basis(n: int) -> Basis:
    """A basis that is feasible for every ``0 <= t < 1/n``.

    It holds the diagonal of the first n-1 rows plus the whole last row.
    Its solution is the identity (lifted to the surrogate when t > 0).
    """
    columns = [column_index(i, i, n) for i in range(1, n)]
    columns += [column_index(n, j, n) for j in range(1, n + 1)]
    return Basis(tuple(columns))


def _neighbours(system: ConstraintSystem, basis: Basis) -> list[Basis]:
    tableau, basic_of_row = canonical_form(system.dense_rows, system.rhs, basis.columns)
    in_basis = set(basis.columns)
    found: list[Basis] = []
    for entering in range(system.cols):
        if entering in in_basis:
            continue
        ratios: list[tuple[Fraction, int]] = [
            (row[-1] / row[entering], r) for r, row in enumerate(tableau) if row[entering] > 0
        ]
        if not ratios:
            continue
        best = min(ratio for ratio, _ in ratios)
        # Every row attaining the minimum ratio gives a feasible pivot.
        for ratio, r in ratios:
            if ratio == best:
                columns = tuple(sorted((in_basis - {basic_of_row[r]}) | {entering}))
                found.append(Basis(columns))
    return found


def enumerate_vertices(system: ConstraintSystem) -> Iterator[BasicSolution]:
    """Yield every vertex of the polytope exactly once.

    Feasible bases are explored breadth-first from :func:`anchor_basis`
    through all ratio-test pivots, so degenerate vertices (t = 0) are
    reached through every basis that represents them. Each vertex is
    reported with the first basis that reached it.

    Args:
        system: The assignment system.

    Yields:
        One basic solution per distinct vertex.
    """
    start = anchor_basis(system.n)
    queue: deque[Basis] = deque([start])
    seen_bases = {start.key}
    seen_values: set[tuple[Fraction, ...]] = set()
    while queue:
        basis = queue.popleft()
        solution = solve_basis(system, basis)
        if solution.values not in seen_values:
            seen_values.add(solution.values)
            yield solution
        for neighbour in _neighbours(system, basis):
            if neighbour.key not in seen_bases:
                seen_bases.add(neighbour.key)
                queue.append(neighbour)


def count_feasible_bases(system: ConstraintSystem) -> int:
    """Count feasible bases reachable by pivoting (all of them)."""
    start = anchor_basis(system.n)
    queue: deque[Basis] = deque([start])
    seen = {start.key}
    while queue:
        for neighbour in _neighbours(system, queue.popleft()):
            if neighbour.key not in seen:
                seen.add(neighbour.key)
                queue.append(neighbour)
    return len(seen)


def cluster_anchor(sigma: Permutation) -> Basis:
    """A feasible surrogate basis whose solution restricts to ``sigma``.

    The row sent to the last column carries its whole row; every other row
    carries only its matched entry. For the identity this is
    :func:`anchor_basis`.
    """
    n = sigma.n
    pivot_row = sigma.inverse()(n)
    columns = [column_index(i, sigma(i), n) for i in range(1, n + 1) if i != pivot_row]
    columns += [column_index(pivot_row, j, n) for j in range(1, n + 1)]
    return Basis(tuple(columns))


def _cluster_neighbours(
    tableau: list[list[Fraction]],
    basic_of_row: list[int],
    matched: frozenset[int],
) -> Iterator[tuple[int, int]]:
    """Pivots that keep every matched column basic.

    Matched columns are left out of the ratio test; an entering column whose
    only positive entries sit on matched rows leaves the cluster.
    """
    in_basis = set(basic_of_row)
    for entering in range(len(tableau[0]) - 1):
        if entering in in_basis:
            continue
        ratios = [
            (row[-1] / row[entering], r)
            for r, row in enumerate(tableau)
            if row[entering] > 0 and basic_of_row[r] not in matched
        ]
        if not ratios:
            continue
        best = min(ratio for ratio, _ in ratios)
        for ratio, r in ratios:
            if ratio == best:
                yield r, entering


def enumerate_cluster(
    system: ConstraintSystem,
    sigma: Permutation,
) -> Iterator[tuple[Basis, tuple[Fraction, ...]]]:
    """Yield every surrogate vertex whose basis restricts to ``sigma``.

    For ``0 < t < 1/n`` each surrogate vertex equals a permutation matrix
    plus ``t`` times an integer vector, and the vertices sharing a
    permutation are exactly the bases that hold all of its matched entries
    with non-negative values elsewhere. They are connected by pivots that
    keep the matched entries basic, so a breadth-first search from
    :func:`cluster_anchor` reaches all of them.

    Args:
        system: A perturbed system.
        sigma: Permutation of the same order.

    Yields:
        Pairs of (basis with ascending columns, row-major vertex values).

    Raises:
        DegeneracyHazardError: If the system is unperturbed.
        DimensionMismatchError: If the orders differ.
    """
    if not system.perturbed:
        raise DegeneracyHazardError(
            "vertex clusters are only defined on a perturbed system",
            details={"n": system.n},
        )
    if sigma.n != system.n:
        raise DimensionMismatchError(system.n, sigma.n, what="permutation")
    n = system.n
    matched = frozenset(column_index(i, sigma(i), n) for i in range(1, n + 1))
    start = cluster_anchor(sigma)
    tableau, basic_of_row = canonical_form(system.dense_rows, system.rhs, start.columns)
    queue = deque([(tableau, basic_of_row)])
    seen = {start.key}
    while queue:
        tableau, basic_of_row = queue.popleft()
        values = [Fraction(0)] * system.cols
        for row, column in zip(tableau, basic_of_row, strict=True):
            values[column] = row[-1]
        yield Basis(tuple(sorted(basic_of_row))), tuple(values)
        for r, entering in _cluster_neighbours(tableau, basic_of_row, matched):
            key = frozenset(basic_of_row) - {basic_of_row[r]} | {entering}
            if key in seen:
                continue
            seen.add(key)
            child = list(tableau)
            pivot(child, r, entering)
            child_basic = list(basic_of_row)
            child_basic[r] = entering
            queue.append((child, child_basic))
