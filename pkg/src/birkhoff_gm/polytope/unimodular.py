"""Total unimodularity checks on square minors."""

from __future__ import annotations

import itertools
import random

import numpy as np
import sympy

from birkhoff_gm.polytope.system import ConstraintSystem

_UNIMODULAR_VALUES = {-1, 0, 1}


def _minor_determinant(matrix: np.ndarray, rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    sub = sympy.Matrix(matrix[np.ix_(rows, cols)].tolist())
    return int(sub.det())


def check_tu_minors(
    source: ConstraintSystem | np.ndarray,
    order: int,
    trials: int | None = 500,
    seed: int = 0,
) -> bool:
    """Check that square minors of one order have determinant in {-1, 0, 1}.

    Any entry outside {-1, 0, 1} fails immediately (it is a 1 x 1 minor).

    Args:
        source: A constraint system or an integer matrix.
        order: Size of the minors to test.
        trials: Number of random minors, or None to test all of them.
        seed: Seed for the random minor selection.

    Returns:
        True if no tested minor has a determinant outside {-1, 0, 1}.

    Raises:
        ValueError: If order is not between 1 and the smaller matrix dimension.
    """
    matrix = np.asarray(source.matrix if isinstance(source, ConstraintSystem) else source)
    rows, cols = matrix.shape
    if not 1 <= order <= min(rows, cols):
        raise ValueError(f"minor order {order} outside 1..{min(rows, cols)}")
    if not set(np.unique(matrix).tolist()) <= _UNIMODULAR_VALUES:
        return False

    if trials is None:
        selections = itertools.product(
            itertools.combinations(range(rows), order),
            itertools.combinations(range(cols), order),
        )
    else:
        rng = random.Random(seed)
        selections = (
            (
                tuple(sorted(rng.sample(range(rows), order))),
                tuple(sorted(rng.sample(range(cols), order))),
            )
            for _ in range(trials)
        )
    return all(
        _minor_determinant(matrix, r, c) in _UNIMODULAR_VALUES for r, c in selections
    )
