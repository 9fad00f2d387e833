"""Oracle configuration."""

from __future__ import annotations

from pydantic import BaseModel, Field

ORACLE_HARD_LIMIT = 10


class OracleConfig(BaseModel):
    """Configuration for the exhaustive permutation oracle.

    Attributes:
        max_n: Largest graph order searched exhaustively (at most 10).
    """

    max_n: int = Field(
        default=ORACLE_HARD_LIMIT,
        ge=2,
        le=ORACLE_HARD_LIMIT,
        description="Largest graph order searched exhaustively",
    )
