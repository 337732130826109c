# wirtinger/core/exceptions.py
from typing import Any


class AppError(Exception):
    """
    Base exception for all domain errors.
    The HTTP layer maps status_code, the CLI maps exit_code.
    """

    status_code: int = 500
    exit_code: int = 1
    detail: str = "An unexpected error occurred"

    def __init__(self, detail: str | None = None, **kwargs: Any) -> None:
        self.detail = detail or self.__class__.detail
        self.context = kwargs
        super().__init__(self.detail)


class NotFoundError(AppError):
    status_code = 404
    detail = "Resource not found"


class ConflictError(AppError):
    status_code = 409
    detail = "Operation does not apply to this input"


class ValidationError(AppError):
    status_code = 422
    detail = "Invalid input"


# ── codec ────────────────────────────────────────────────────────────────────

class MalformedSyntax(ValidationError):
    detail = "Gauss code could not be parsed"


class UnbalancedCrossing(ValidationError):
    detail = "Every crossing label must appear once positive and once negative"


class EmptyInput(ValidationError):
    detail = "Gauss code has no components"


# ── coloring ─────────────────────────────────────────────────────────────────

class UnknownStrand(NotFoundError):
    detail = "Strand not present in diagram"


class DuplicateSeed(ValidationError):
    detail = "Seed strands must be distinct"


class EmptySeedSet(ValidationError):
    detail = "At least one seed strand is required"


class UncoloredStrand(NotFoundError):
    detail = "Strand has not been colored"


# ── search ───────────────────────────────────────────────────────────────────

class KOutOfRange(ValidationError):
    detail = "Seed-set size out of range"


class NotApplicable(ConflictError):
    detail = "Bound applies only to knot diagrams with at least two crossings"


# ── verify ───────────────────────────────────────────────────────────────────

class IncompleteColoring(ConflictError):
    detail = "Coloring does not cover every strand"


class NonLinearColorClass(ConflictError):
    detail = "Color class is neither a path nor a whole component"


class CutSplitInput(ConflictError):
    detail = "Diagram is cut-split"


class PropertyViolation(ConflictError):
    detail = "Coloring fails the structural property checks"


class NotCutSplit(ConflictError):
    detail = "Diagram is not cut-split"


# ── bounds ───────────────────────────────────────────────────────────────────

class NoCrossings(ConflictError):
    detail = "Diagram has no crossings"


# ── tabulate ─────────────────────────────────────────────────────────────────

class UnreadableInput(NotFoundError):
    detail = "Input file could not be read"


class MalformedHeader(ValidationError):
    detail = "Input CSV header is missing required columns"
