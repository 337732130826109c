# wirtinger/models/diagram.py
from typing import Optional

from pydantic import BaseModel, ConfigDict


class GaussCode(BaseModel):
    """
    Signed crossing visits, one sequence per link component.
    -n passes under crossing n, +n passes over it.
    Built only through codec.parse_gauss / codec.normalize_components.
    """

    model_config = ConfigDict(frozen=True)

    components: tuple[tuple[int, ...], ...] = ()

    @property
    def crossing_count(self) -> int:
        return sum(len(entries) for entries in self.components) // 2

    @property
    def component_count(self) -> int:
        return len(self.components)

    def __repr__(self) -> str:
        return f"<GaussCode components={len(self.components)} crossings={self.crossing_count}>"


class Strand(BaseModel):
    """
    Arc between two consecutive undercrossings of one component.

    visits holds the subsequence including both endpoints, e.g. [-1, 3, -2].
    A component that never passes under is a single closed strand whose
    visits are the whole (possibly empty) component.
    """

    model_config = ConfigDict(frozen=True)

    id: int
    component: int
    position: int
    visits: tuple[int, ...]
    over_at: frozenset[int] = frozenset()
    closed: bool = False

    @property
    def start_crossing(self) -> Optional[int]:
        return None if self.closed else -self.visits[0]

    @property
    def end_crossing(self) -> Optional[int]:
        return None if self.closed else -self.visits[-1]


class Crossing(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int
    over: int
    # (strand ending here, strand starting here); equal only when cut-split
    under: tuple[int, int]

    @property
    def is_kink(self) -> bool:
        return self.over in self.under


class Diagram(BaseModel):
    """
    Strands, crossings and the knot dictionary of a Gauss code.

    components lists each component's strand ids in cyclic traversal order;
    names holds the display name of every strand (a, b, ... / u0, u1, ...).
    """

    model_config = ConfigDict(frozen=True)

    code: GaussCode
    strands: tuple[Strand, ...] = ()
    crossings: tuple[Crossing, ...] = ()
    dictionary: dict[int, frozenset[int]] = {}
    components: tuple[tuple[int, ...], ...] = ()
    names: tuple[str, ...] = ()

    @property
    def strand_count(self) -> int:
        return len(self.strands)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def is_knot(self) -> bool:
        return len(self.components) == 1

    @property
    def closed_strands(self) -> tuple[int, ...]:
        return tuple(s.id for s in self.strands if s.closed)

    def strand(self, strand_id: int) -> Strand:
        return self.strands[strand_id]

    def crossing(self, crossing_id: int) -> Crossing:
        return self.crossings[crossing_id - 1]

    def __repr__(self) -> str:
        return (
            f"<Diagram strands={self.strand_count} "
            f"crossings={self.crossing_count} components={self.component_count}>"
        )
