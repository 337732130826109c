# wirtinger/schemas/__init__.py
from wirtinger.schemas.search import (
    SearchOptions,
    WirtingerResult,
    BoundedResult,
)
from wirtinger.schemas.verify import (
    PropertyReport,
    CriticalPoint,
    MorseProfile,
    CutSplitReduction,
)
from wirtinger.schemas.bounds import (
    TwistRegion,
    VolumeBound,
)
from wirtinger.schemas.tabulate import (
    RESULT_SCHEMA_VERSION,
    Status,
    KnotRow,
    KnownBridgeRow,
    BatchOptions,
    CheckSummary,
    TabulationRecord,
    ResultRow,
    ComparisonRow,
    ComparisonReport,
)
from wirtinger.schemas.diagram import (
    GaussRequest,
    SeedsRequest,
    OmegaRequest,
    DictionaryResponse,
    OmegaResponse,
    VerifyResponse,
    BoundsResponse,
)
from wirtinger.schemas.common import ErrorResponse

__all__ = [
    # Search
    "SearchOptions",
    "WirtingerResult",
    "BoundedResult",
    # Verify
    "PropertyReport",
    "CriticalPoint",
    "MorseProfile",
    "CutSplitReduction",
    # Bounds
    "TwistRegion",
    "VolumeBound",
    # Tabulate
    "RESULT_SCHEMA_VERSION",
    "Status",
    "KnotRow",
    "KnownBridgeRow",
    "BatchOptions",
    "CheckSummary",
    "TabulationRecord",
    "ResultRow",
    "ComparisonRow",
    "ComparisonReport",
    # HTTP
    "GaussRequest",
    "SeedsRequest",
    "OmegaRequest",
    "DictionaryResponse",
    "OmegaResponse",
    "VerifyResponse",
    "BoundsResponse",
    "ErrorResponse",
]
