# wirtinger/schemas/verify.py
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from wirtinger.models.diagram import Diagram


class PropertyReport(BaseModel):
    connectivity_ok: bool = True
    unique_max_ok: bool = True
    overstrand_height_ok: bool = True
    cut_split: bool = False
    # (color, crossing id) pairs allowed by the whole-component exception
    link_exception_crossings: list[tuple[int, int]] = Field(default_factory=list)
    violations: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.connectivity_ok and self.unique_max_ok and self.overstrand_height_ok

    @model_validator(mode="after")
    def flags_match_violations(self) -> "PropertyReport":
        if self.ok == bool(self.violations):
            raise ValueError("Report flags and violations disagree")
        return self


class CriticalPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["max", "min"]
    value: int
    site_kind: Literal["strand", "crossing"]
    site: int


class MorseProfile(BaseModel):
    model_config = ConfigDict(frozen=True)

    # one cyclic list per component, in traversal order
    components: tuple[tuple[CriticalPoint, ...], ...]

    @property
    def maxima(self) -> int:
        return sum(p.kind == "max" for points in self.components for p in points)

    @property
    def minima(self) -> int:
        return sum(p.kind == "min" for points in self.components for p in points)


class CutSplitReduction(BaseModel):
    model_config = ConfigDict(frozen=True)

    removed_strand: int
    removed_component: int
    reduced: Diagram
