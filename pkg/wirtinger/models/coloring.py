# wirtinger/models/coloring.py
from pydantic import BaseModel, ConfigDict


class Move(BaseModel):
    """One coloring move: at `crossing`, `strand` receives `color`."""

    model_config = ConfigDict(frozen=True)

    crossing: int
    strand: int
    color: int


class ColoringState(BaseModel):
    """
    Partial coloring (A, f) of a diagram.
    Seeds are the first `len(seeds)` keys of `colored` and keep colors 1..k.
    """

    model_config = ConfigDict(frozen=True)

    colored: dict[int, int]
    seeds: tuple[int, ...]
    stage: int = 0
    diagram_ref: str

    @property
    def k(self) -> int:
        return len(self.seeds)


class ColoringSequence(BaseModel):
    model_config = ConfigDict(frozen=True)

    # seeds first in seed order, then strands in the order they were colored
    order: tuple[int, ...]
    final_colors: dict[int, int]
    seed_count: int
    moves: tuple[Move, ...] = ()

    @property
    def seeds(self) -> tuple[int, ...]:
        return self.order[: self.seed_count]


class ColoringResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    complete: bool
    state: ColoringState
    sequence: ColoringSequence
