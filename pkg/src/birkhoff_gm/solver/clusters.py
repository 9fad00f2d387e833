"""Best-first search over the vertex clusters of a surrogate polytope.

For ``0 < t < 1/n`` every surrogate vertex is ``sigma + t c`` with sigma a
permutation matrix and c an integer vector with entries in ``[-n, n]``.
Vertices sharing sigma form its cluster. A cluster is bounded by
``f(sigma)`` plus the objective's drift bound at radius ``n t``; clusters are
opened in bound order and enumerated exactly until no unopened bound beats
the incumbent.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from birkhoff_gm.errors import BirkhoffError, SizeLimitError
from birkhoff_gm.polytope import Permutation, enumerate_cluster, solve_basis
from birkhoff_gm.solver.search import BranchAndBound
from birkhoff_gm.solver.trace import SolverTrace

# Largest order whose n! cluster bounds are computed up front.
CLUSTER_LIMIT = 8


@dataclass(order=True)
class _Cluster:
    sort_key: tuple[Fraction, tuple[int, ...]]
    sigma: Permutation = field(compare=False)

    @property
    def bound(self) -> Fraction:
        return -self.sort_key[0]


class ClusterSearch(BranchAndBound):
    """Open clusters best bound first; ties go to the smaller permutation."""

    def cluster_bounds(self) -> list[_Cluster]:
        n = self.system.n
        if n > CLUSTER_LIMIT:
            raise SizeLimitError(n, CLUSTER_LIMIT)
        radius = n * self.system.t
        clusters = []
        for images in itertools.permutations(range(n)):
            sigma = Permutation.from_zero_based(images)
            values = sigma.to_values()
            drift = self.objective.drift_bound(values, radius)
            if drift is None:
                raise BirkhoffError(
                    "objective provides no drift bound for cluster search",
                    details={"objective": repr(self.objective)},
                )
            bound = self.objective.evaluate_values(values) + drift
            clusters.append(_Cluster((-bound, sigma.images), sigma))
        heapq.heapify(clusters)
        return clusters

    def open(self, cluster: _Cluster) -> None:
        """Evaluate every vertex of a cluster."""
        self.trace.nodes_created += 1
        for basis, values in enumerate_cluster(self.system, cluster.sigma):
            value = self.objective.evaluate_values(values)
            if self.improves(value):
                self.offer(solve_basis(self.system, basis), value)

    def run(self) -> SolverTrace:
        self.hooks.trigger_solve_start(self.system)
        heap = self.cluster_bounds()
        self.open(heapq.heappop(heap))
        self.record(0, heap[0].bound if heap else None, len(heap))

        iteration = 0
        while heap and heap[0].bound > self.incumbent_value:
            if self.budget_spent(iteration, len(heap)):
                break
            iteration += 1
            self.open(heapq.heappop(heap))
            self.record(iteration, heap[0].bound if heap else None, len(heap))
        else:
            self.trace.status = "optimal"
        return self.finish()
