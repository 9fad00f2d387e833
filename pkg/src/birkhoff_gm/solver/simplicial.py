"""Simplicial branch-and-bound for maximizing a convex function over a polytope.

Simplices live in the affine hull of the surrogate polytope. Each simplex is
bounded by maximizing the affine interpolant of the objective at its vertices
over the part of the polytope it covers; convexity makes the interpolant an
overestimator. Incumbents are polytope vertices reached by local ascent from
the interpolant's maximizer.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from birkhoff_gm.errors import BirkhoffError
from birkhoff_gm.objective.base import ConvexObjective
from birkhoff_gm.polytope import ConstraintSystem
from birkhoff_gm.solver.config import SolverOptions
from birkhoff_gm.solver.hooks import SolverHooks
from birkhoff_gm.solver.lp import simplex_maximize, solve_lp
from birkhoff_gm.solver.search import BranchAndBound
from birkhoff_gm.solver.trace import SolverTrace

Point = tuple[Fraction, ...]


@dataclass(order=True)
class _Node:
    sort_key: tuple[Fraction, int]
    vertices: tuple[Point, ...] = field(compare=False)
    values: tuple[Fraction, ...] = field(compare=False)
    weights: tuple[Fraction, ...] = field(compare=False)
    omega: Point = field(compare=False)

    @property
    def bound(self) -> Fraction:
        return -self.sort_key[0]


def dependent_columns(n: int) -> tuple[int, ...]:
    """Columns of the last row and last column, fixed by the free block."""
    return tuple(k for k in range(n * n) if k // n == n - 1 or k % n == n - 1)


def complete_point(system: ConstraintSystem, free: dict[tuple[int, int], Fraction]) -> Point:
    """Extend values of the leading (n-1) x (n-1) block to a point of the affine hull.

    Args:
        system: Surrogate system (supplies n and t).
        free: 0-based ``(i, j) -> value`` for ``i, j < n - 1``; missing entries are 0.

    Returns:
        Row-major n^2 point satisfying every equality of the system.
    """
    n, t = system.n, system.t
    x = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), value in free.items():
        x[i][j] = value
    for i in range(n - 1):
        x[i][n - 1] = (1 - t) - sum(x[i][: n - 1], Fraction(0))
    for j in range(n - 1):
        x[n - 1][j] = 1 - sum((x[i][j] for i in range(n - 1)), Fraction(0))
    x[n - 1][n - 1] = (1 - t) - sum(x[n - 1][: n - 1], Fraction(0))
    return tuple(v for row in x for v in row)


def _squared_distance(a: Point, b: Point) -> Fraction:
    return sum(((u - v) ** 2 for u, v in zip(a, b, strict=True)), Fraction(0))


class SimplicialSearch(BranchAndBound):
    """One simplicial run; holds the node pool on top of the shared bookkeeping."""

    def __init__(
        self,
        objective: ConvexObjective,
        system: ConstraintSystem,
        options: SolverOptions,
        hooks: SolverHooks,
    ) -> None:
        super().__init__(objective, system, options, hooks)
        self._dependent = dependent_columns(system.n)
        self._values: dict[Point, Fraction] = {}
        self._ascended: set[Point] = set()
        self._sequence = 0

    def value(self, point: Point) -> Fraction:
        cached = self._values.get(point)
        if cached is None:
            cached = self._values[point] = self.objective.evaluate_values(point)
        return cached

    def root_vertices(self) -> tuple[Point, ...]:
        """Corner simplex ``{y >= 0, sum(y) <= (n-1)(1-t)}`` of the free block."""
        n = self.system.n
        scale = (n - 1) * (1 - self.system.t)
        vertices = [complete_point(self.system, {})]
        for i in range(n - 1):
            for j in range(n - 1):
                vertices.append(complete_point(self.system, {(i, j): scale}))
        return tuple(vertices)

    def bound(
        self,
        vertices: tuple[Point, ...],
        parent_bound: Fraction | None,
    ) -> _Node | None:
        """Maximize the interpolant over the covered part of the polytope.

        Rows: weights sum to 1, and each dependent coordinate of the weighted
        point stays non-negative (with a slack). The free coordinates are
        non-negative on the whole root simplex.
        """
        values = tuple(self.value(v) for v in vertices)
        size = len(vertices)
        slacks = len(self._dependent)
        matrix = [[Fraction(1)] * size + [Fraction(0)] * slacks]
        for s, column in enumerate(self._dependent):
            row = [v[column] for v in vertices]
            row += [Fraction(-1) if r == s else Fraction(0) for r in range(slacks)]
            matrix.append(row)
        rhs = [Fraction(1)] + [Fraction(0)] * slacks
        outcome = simplex_maximize(matrix, rhs, [*values, *([Fraction(0)] * slacks)])
        if outcome.status != "optimal":
            return None

        weights = outcome.values[:size]
        omega = tuple(
            sum((w * v[k] for w, v in zip(weights, vertices, strict=True) if w), Fraction(0))
            for k in range(self.system.cols)
        )
        bound = outcome.value if parent_bound is None else min(outcome.value, parent_bound)
        self._sequence += 1
        self.trace.nodes_created += 1
        self.ascend(omega)
        return _Node((-bound, self._sequence), vertices, values, weights, omega)

    def ascend(self, point: Point) -> None:
        """Climb to a vertex by repeatedly maximizing the linearization at a point.

        Each step returns a vertex at least as good as its start (convexity).
        """
        current = point
        for _ in range(self.options.ascent_steps):
            if current in self._ascended:
                return
            self._ascended.add(current)
            result = solve_lp(self.system, self.objective.gradient_values(current))
            vertex = result.solution
            if vertex is None:
                raise BirkhoffError(f"ascent LP ended {result.status}", details={"status": result.status})
            self.offer(vertex, self.value(vertex.values))
            if vertex.values == current:
                return
            current = vertex.values

    def subdivide(self, node: _Node) -> list[tuple[Point, ...]]:
        positive = [i for i, w in enumerate(node.weights) if w > 0]
        if self.options.subdivision_rule == "omega" and len(positive) > 1:
            children = []
            for i in positive:
                vertices = list(node.vertices)
                vertices[i] = node.omega
                children.append(tuple(vertices))
            return children
        return self._bisect(node.vertices)

    @staticmethod
    def _bisect(vertices: tuple[Point, ...]) -> list[tuple[Point, ...]]:
        best: tuple[Fraction, int, int] | None = None
        for a in range(len(vertices)):
            for b in range(a + 1, len(vertices)):
                d = _squared_distance(vertices[a], vertices[b])
                if best is None or d > best[0]:
                    best = (d, a, b)
        assert best is not None
        _, a, b = best
        midpoint = tuple((u + v) / 2 for u, v in zip(vertices[a], vertices[b], strict=True))
        left = list(vertices)
        left[a] = midpoint
        right = list(vertices)
        right[b] = midpoint
        return [tuple(left), tuple(right)]

    def run(self) -> SolverTrace:
        self.hooks.trigger_solve_start(self.system)
        root = self.bound(self.root_vertices(), None)
        if root is None or self.incumbent_value is None:
            raise BirkhoffError("surrogate polytope is empty")
        heap = [root]
        self.record(0, heap[0].bound, len(heap))

        iteration = 0
        while heap and heap[0].bound > self.incumbent_value:
            if self.budget_spent(iteration, len(heap)):
                break
            node = heapq.heappop(heap)
            iteration += 1
            for vertices in self.subdivide(node):
                child = self.bound(vertices, node.bound)
                if child is not None and child.bound > self.incumbent_value:
                    heapq.heappush(heap, child)
            self.record(iteration, heap[0].bound if heap else None, len(heap))
        else:
            self.trace.status = "optimal"
        return self.finish()
