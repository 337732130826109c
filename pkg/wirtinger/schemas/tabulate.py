# wirtinger/schemas/tabulate.py
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from wirtinger.schemas.verify import PropertyReport

RESULT_SCHEMA_VERSION = 1


def _blank_to_none(v):
    """CSV cells are strings; an empty optional cell means absent."""
    if isinstance(v, str) and not v.strip():
        return None
    return v


class Status(str, Enum):
    MATCH = "MATCH"
    UPPER_BOUND_ONLY = "UPPER_BOUND_ONLY"
    MISMATCH = "MISMATCH"
    SKIPPED = "SKIPPED"


class KnotRow(BaseModel):
    """One row of a knot-table input CSV."""

    name: str = Field(..., min_length=1)
    gauss: str
    known_bridge: Optional[int] = Field(None, ge=1)
    known_volume: Optional[float] = Field(None, gt=0)
    alternating: Optional[bool] = None

    @field_validator("known_bridge", "known_volume", "alternating", mode="before")
    @classmethod
    def empty_is_absent(cls, v):
        return _blank_to_none(v)


class KnownBridgeRow(BaseModel):
    name: str = Field(..., min_length=1)
    known_bridge: Optional[int] = Field(None, ge=1)

    @field_validator("known_bridge", mode="before")
    @classmethod
    def empty_is_absent(cls, v):
        return _blank_to_none(v)


class BatchOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    jobs: int = Field(1, ge=1)
    budget_ms: Optional[int] = Field(None, ge=1)
    cutoff_k: Optional[int] = Field(None, ge=0)
    record_timings: bool = True


class CheckSummary(BaseModel):
    report: PropertyReport
    local_maxima: Optional[int] = None
    profile_error: Optional[str] = None

    def passed(self, omega: Optional[int]) -> bool:
        return self.report.ok and self.profile_error is None and self.local_maxima == omega

    def label(self, omega: Optional[int]) -> str:
        """Short form for the CSV `checks` column."""
        if not self.passed(omega):
            reasons = self.report.violations or [self.profile_error or "maxima != omega"]
            return f"fail: {reasons[0]}"
        return "pass (cut-split)" if self.report.cut_split else "pass"


class TabulationRecord(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(RESULT_SCHEMA_VERSION, alias="schema")
    name: str
    gauss: str = ""
    crossings: Optional[int] = None
    components: Optional[int] = None
    omega: Optional[int] = None
    witness: list[str] = Field(default_factory=list)
    twist_number: Optional[int] = None
    bound_2t: Optional[int] = None
    checks: Optional[CheckSummary] = None
    elapsed_ms: int = 0
    known_bridge: Optional[int] = None
    known_volume: Optional[float] = None
    volume_ok: Optional[bool] = None
    status: Status = Status.SKIPPED
    diagnostic: Optional[str] = None


class ResultRow(BaseModel):
    """Summary row of the results CSV."""

    name: str
    crossings: Optional[int] = None
    components: Optional[int] = None
    omega: Optional[int] = None
    witness: str = ""
    twist_number: Optional[int] = None
    bound_2t: Optional[int] = None
    checks: str = ""
    status: Status
    elapsed_ms: int = 0

    @field_validator(
        "crossings", "components", "omega", "twist_number", "bound_2t", mode="before"
    )
    @classmethod
    def empty_is_absent(cls, v):
        return _blank_to_none(v)

    @classmethod
    def from_record(cls, record: TabulationRecord) -> "ResultRow":
        return cls(
            name=record.name,
            crossings=record.crossings,
            components=record.components,
            omega=record.omega,
            witness=" ".join(record.witness),
            twist_number=record.twist_number,
            bound_2t=record.bound_2t,
            checks=record.checks.label(record.omega) if record.checks else "",
            status=record.status,
            elapsed_ms=record.elapsed_ms,
        )

    def to_record(self) -> TabulationRecord:
        return TabulationRecord(
            name=self.name,
            crossings=self.crossings,
            components=self.components,
            omega=self.omega,
            witness=self.witness.split(),
            twist_number=self.twist_number,
            bound_2t=self.bound_2t,
            elapsed_ms=self.elapsed_ms,
            status=self.status,
        )


class ComparisonRow(BaseModel):
    name: str
    omega: Optional[int]
    known_bridge: Optional[int]
    status: Status


class ComparisonReport(BaseModel):
    rows: list[ComparisonRow]
    counts: dict[Status, int]

    @property
    def ok(self) -> bool:
        return self.counts.get(Status.MISMATCH, 0) == 0
