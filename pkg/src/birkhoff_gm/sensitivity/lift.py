"""Moving vertices and bases between the original and surrogate polytopes."""

from __future__ import annotations

from fractions import Fraction

from birkhoff_gm._internal.rational import RationalLike, as_fraction
from birkhoff_gm.errors import PerturbationRangeError
from birkhoff_gm.polytope import (
    BasicSolution,
    Basis,
    ConstraintSystem,
    bfs_to_permutation,
    build_birkhoff,
    solve_basis,
)


def lift_vertex(xhat: BasicSolution, t: RationalLike) -> tuple[Fraction, ...]:
    """Surrogate point within ``n t`` of a permutation vertex, componentwise.

    The row holding the unit in the last column gets ``1 - nt`` there and
    ``t`` everywhere else; every other row keeps its unit entry, scaled to
    ``1 - t``.

    Raises:
        NotAVertexError: If xhat is not a permutation matrix.
        PerturbationRangeError: If t is outside (0, 1/n).
    """
    sigma = bfs_to_permutation(xhat)
    n = sigma.n
    t = as_fraction(t)
    if not 0 < t < Fraction(1, n):
        raise PerturbationRangeError(t, n)

    pivot_row = sigma.inverse()(n)
    values = [Fraction(0)] * (n * n)
    for i in range(1, n + 1):
        if i == pivot_row:
            for j in range(1, n):
                values[(i - 1) * n + j - 1] = t
            values[(i - 1) * n + n - 1] = 1 - n * t
        else:
            values[(i - 1) * n + sigma(i) - 1] = 1 - t
    return tuple(values)


def restrict_basis(basis: Basis, surrogate: ConstraintSystem) -> BasicSolution:
    """Re-solve a surrogate basis against the unperturbed right-hand side.

    Infeasibility is reported through the ``feasible`` flag.
    """
    return solve_basis(build_birkhoff(surrogate.n), basis)
