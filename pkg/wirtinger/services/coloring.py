# wirtinger/services/coloring.py
import logging
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from wirtinger.core.exceptions import DuplicateSeed, EmptySeedSet, UncoloredStrand, UnknownStrand
from wirtinger.models.coloring import ColoringResult, ColoringSequence, ColoringState, Move
from wirtinger.models.diagram import Diagram
from wirtinger.services.codec import emit_gauss

logger = logging.getLogger(__name__)

# (over bit, first understrand bit, second understrand bit) per crossing
CrossingMasks = tuple[tuple[int, int, int], ...]


def _validate_seeds(d: Diagram, seeds: Iterable[int]) -> tuple[int, ...]:
    ordered = tuple(seeds)
    if not ordered:
        raise EmptySeedSet()
    for sid in ordered:
        if not isinstance(sid, int) or not 0 <= sid < d.strand_count:
            raise UnknownStrand(f"Unknown strand {sid!r}")
    if len(set(ordered)) != len(ordered):
        raise DuplicateSeed(f"Seed strands repeat: {list(ordered)}")
    return ordered


def _moves(d: Diagram, colored: Mapping[int, int]) -> Iterator[Move]:
    # dictionary scan: colored overstrands by id, their crossings by id
    for over in sorted(colored):
        for label in sorted(d.dictionary[over]):
            left, right = d.crossing(label).under
            if (left in colored) == (right in colored):
                continue
            source, target = (left, right) if left in colored else (right, left)
            yield Move(crossing=label, strand=target, color=colored[source])


# ── Partial colorings ─────────────────────────────────────────────────────────

def seed_coloring(d: Diagram, seeds: Sequence[int]) -> ColoringState:
    """Initial coloring f(s_j) = j for the j-th seed."""
    ordered = _validate_seeds(d, seeds)
    return ColoringState(
        colored={sid: j for j, sid in enumerate(ordered, start=1)},
        seeds=ordered,
        stage=0,
        diagram_ref=emit_gauss(d.code),
    )


def iter_coloring_moves(d: Diagram, st: ColoringState) -> Iterator[Move]:
    """Every legal move from `st`, in scheduling order."""
    return _moves(d, st.colored)


def find_coloring_move(d: Diagram, st: ColoringState) -> Optional[Move]:
    """
    Next move under the fixed schedule, or None at a fixpoint.

    A move exists at crossing c when the overstrand and exactly one
    understrand are colored; the other understrand copies that color.
    """
    return next(_moves(d, st.colored), None)


def apply_move(st: ColoringState, move: Move) -> ColoringState:
    if move.strand in st.colored:
        raise ValueError(f"Strand {move.strand} is already colored")
    colored = dict(st.colored)
    colored[move.strand] = move.color
    return st.model_copy(update={"colored": colored, "stage": st.stage + 1})


def extend_to_fixpoint(d: Diagram, seeds: Sequence[int]) -> ColoringResult:
    """
    Apply scheduled moves until none remains.

    Examples:
        (trefoil, [a, b]) → complete, order [a, b, c], colors {a:1, b:2, c:2}
        (trefoil, [a])    → incomplete, order [a]
    """
    state = seed_coloring(d, seeds)
    colored = dict(state.colored)
    order = list(state.seeds)
    moves: list[Move] = []

    while (move := next(_moves(d, colored), None)) is not None:
        colored[move.strand] = move.color
        order.append(move.strand)
        moves.append(move)

    final = state.model_copy(update={"colored": colored, "stage": len(moves)})
    sequence = ColoringSequence(
        order=tuple(order),
        final_colors=colored,
        seed_count=state.k,
        moves=tuple(moves),
    )
    return ColoringResult(
        complete=len(colored) == d.strand_count,
        state=final,
        sequence=sequence,
    )


def height(seq: ColoringSequence, s: int) -> int:
    """h(alpha_j) = -j for the j-th strand of the coloring order."""
    try:
        return -(seq.order.index(s) + 1)
    except ValueError:
        raise UncoloredStrand(f"Strand {s} is not in the coloring order") from None


# ── Monochromatic closure ─────────────────────────────────────────────────────

def crossing_masks(d: Diagram) -> CrossingMasks:
    return tuple((1 << c.over, 1 << c.under[0], 1 << c.under[1]) for c in d.crossings)


def full_mask(d: Diagram) -> int:
    return (1 << d.strand_count) - 1


def closure_mask(masks: CrossingMasks, mask: int) -> int:
    """
    Colored set reached from `mask` with a single collapsed color.
    Equal to the distinct-color completion since moves only test membership.
    """
    changed = True
    while changed:
        changed = False
        for over, left, right in masks:
            if mask & over and bool(mask & left) != bool(mask & right):
                mask |= left | right
                changed = True
    return mask


def colorable_set(d: Diagram, seeds: Iterable[int]) -> frozenset[int]:
    ordered = _validate_seeds(d, seeds)
    mask = closure_mask(crossing_masks(d), sum(1 << sid for sid in ordered))
    return frozenset(sid for sid in range(d.strand_count) if mask >> sid & 1)


def is_generating_system(d: Diagram, seeds: Iterable[int]) -> bool:
    """True iff the seeds color every strand."""
    ordered = _validate_seeds(d, seeds)
    mask = sum(1 << sid for sid in ordered)
    return closure_mask(crossing_masks(d), mask) == full_mask(d)
