# wirtinger/schemas/diagram.py
from typing import Optional

from pydantic import BaseModel, Field, field_validator

from wirtinger.schemas.bounds import TwistRegion, VolumeBound
from wirtinger.schemas.verify import MorseProfile, PropertyReport


class GaussRequest(BaseModel):
    gauss: str = Field(..., min_length=1, max_length=10_000)


class SeedsRequest(GaussRequest):
    """Seeds by display name (a, b, ...) or integer strand id."""

    seeds: list[str] = Field(..., min_length=1)

    @field_validator("seeds", mode="before")
    @classmethod
    def split_comma_list(cls, v):
        if isinstance(v, str):
            return [s for s in v.split(",") if s.strip()]
        return [str(s) for s in v]


class OmegaRequest(GaussRequest):
    cutoff_k: Optional[int] = Field(None, ge=0)
    budget_ms: Optional[int] = Field(None, ge=1)


class DictionaryResponse(BaseModel):
    gauss: str
    strands: list[str]
    dictionary: dict[str, list[list[str]]]
    closed: list[str]


class OmegaResponse(BaseModel):
    """Exact result when `omega` is set; otherwise only omega > `exceeds` is known."""

    gauss: str
    crossings: int
    components: int
    omega: Optional[int] = None
    witness: list[str] = Field(default_factory=list)
    exceeds: Optional[int] = None
    reason: Optional[str] = None
    sets_tested: int
    elapsed_ms: int


class VerifyResponse(BaseModel):
    complete: bool
    order: list[str]
    colors: dict[str, int]
    report: Optional[PropertyReport] = None
    profile: Optional[MorseProfile] = None
    local_maxima: Optional[int] = None


class BoundsResponse(BaseModel):
    crossings: int
    twist_regions: list[TwistRegion]
    twist_number: int
    bound_2t: int
    seeding: list[str]
    seeding_generates: bool
    volume: VolumeBound
