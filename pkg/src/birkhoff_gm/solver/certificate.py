"""Integer optimality-gap certificates from bound traces."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from birkhoff_gm._internal.rational import RationalLike, as_fraction
from birkhoff_gm.sensitivity.bounds import round_upper_bound
from birkhoff_gm.solver.trace import SolverTrace


class GapCertificate(NamedTuple):
    """Integer upper bound for the original problem and the incumbent's gap to it."""

    upper_bound: int
    gap: Fraction | int


def certify_gap(trace: SolverTrace, incumbent_value: RationalLike) -> GapCertificate:
    """Round the final upper bound up and compare it with an integral incumbent.

    Args:
        trace: Trace of a surrogate solve with a basis-preserving t.
        incumbent_value: Objective value of the restricted vertex.

    Returns:
        ``(ceil(upper_bound), ceil(upper_bound) - incumbent_value)``.
    """
    upper = round_upper_bound(trace.upper_bound)
    gap = upper - as_fraction(incumbent_value)
    return GapCertificate(upper, int(gap) if gap.denominator == 1 else gap)
