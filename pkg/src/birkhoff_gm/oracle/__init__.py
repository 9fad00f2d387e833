"""Brute-force ground truth for graph matching."""

from birkhoff_gm.oracle.config import ORACLE_HARD_LIMIT, OracleConfig
from birkhoff_gm.oracle.search import OracleResult, oracle_gm, relabel_invariance

__all__ = [
    "ORACLE_HARD_LIMIT",
    "OracleConfig",
    "OracleResult",
    "oracle_gm",
    "relabel_invariance",
]
