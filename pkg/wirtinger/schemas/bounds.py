# wirtinger/schemas/bounds.py
from pydantic import BaseModel, ConfigDict, Field


class TwistRegion(BaseModel):
    """Maximal chain of stacked bigons, or a lone crossing."""

    model_config = ConfigDict(frozen=True)

    crossings: tuple[int, ...] = Field(..., min_length=1)
    # bigon pairs joining consecutive crossings of the chain
    bigons: tuple[tuple[int, int], ...] = ()


class VolumeBound(BaseModel):
    model_config = ConfigDict(frozen=True)

    v3: float
    c_const: float
    beta_upper: int
    lower_bound: float
    hyperbolic_floor: float
