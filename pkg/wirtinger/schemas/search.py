# wirtinger/schemas/search.py
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class SearchOptions(BaseModel):
    """
    parallelism: worker processes (1 = in-process search).
    cutoff_k / budget_ms: stop early with a BoundedResult.
    """

    model_config = ConfigDict(frozen=True)

    parallelism: int = Field(1, ge=1)
    cutoff_k: Optional[int] = Field(None, ge=0)
    budget_ms: Optional[int] = Field(None, ge=1)
    chunk_size: int = Field(2_048, ge=1)


class WirtingerResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    omega: int = Field(..., ge=0)
    witness: tuple[int, ...]
    sets_tested: int
    elapsed: float                       # seconds
    kind: Literal["exact"] = "exact"


class BoundedResult(BaseModel):
    """Search stopped early: only omega > exceeds is known."""

    model_config = ConfigDict(frozen=True)

    exceeds: int
    reason: Literal["cutoff", "time_budget"]
    sets_tested: int
    elapsed: float
    kind: Literal["bounded"] = "bounded"
