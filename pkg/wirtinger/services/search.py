# wirtinger/services/search.py
import logging
import time
from collections import deque
from concurrent.futures import Future, ProcessPoolExecutor
from itertools import combinations, islice
from math import comb
from typing import Iterator, Optional, Union

from wirtinger.core.exceptions import KOutOfRange, NotApplicable
from wirtinger.models.diagram import Diagram
from wirtinger.schemas.search import BoundedResult, SearchOptions, WirtingerResult
from wirtinger.services.coloring import CrossingMasks, closure_mask, crossing_masks, full_mask

logger = logging.getLogger(__name__)

SearchOutcome = Union[WirtingerResult, BoundedResult]

_BUDGET_CHECK_EVERY = 256

# Worker-process state, set once per pool by _init_worker.
_worker_masks: CrossingMasks = ()
_worker_full = 0


def _init_worker(masks: CrossingMasks, full: int) -> None:
    global _worker_masks, _worker_full
    _worker_masks = masks
    _worker_full = full


def _scan_chunk(candidates: list[int]) -> Optional[int]:
    """Index of the first generating candidate mask in the chunk, or None."""
    for index, mask in enumerate(candidates):
        if closure_mask(_worker_masks, mask) == _worker_full:
            return index
    return None


def _bits(ids: tuple[int, ...]) -> int:
    return sum(1 << sid for sid in ids)


# ── Enumeration ───────────────────────────────────────────────────────────────

def enumerate_seed_sets(d: Diagram, k: int) -> Iterator[tuple[int, ...]]:
    """
    All k-subsets of strand ids in lexicographic order, streamed.

    Examples:
        (trefoil, 2) → (0, 1), (0, 2), (1, 2)
        (trefoil, 4) → KOutOfRange
    """
    if not 1 <= k <= d.strand_count:
        raise KOutOfRange(f"k={k} outside 1..{d.strand_count}")
    return combinations(range(d.strand_count), k)


def _candidates(forced: tuple[int, ...], free: tuple[int, ...], k: int) -> Iterator[tuple[int, ...]]:
    # closed strands can only be seeds, so they join every candidate
    for chosen in combinations(free, k - len(forced)):
        yield tuple(sorted(forced + chosen))


class _Budget:
    def __init__(self, budget_ms: Optional[int]) -> None:
        self.started = time.perf_counter()
        self.deadline = None if budget_ms is None else self.started + budget_ms / 1000

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.started

    def exhausted(self) -> bool:
        return self.deadline is not None and time.perf_counter() > self.deadline


# ── Wirtinger number ──────────────────────────────────────────────────────────

def wirtinger_number(d: Diagram, opts: Optional[SearchOptions] = None) -> SearchOutcome:
    """
    Least k admitting a Wirtinger generating system, with the
    lexicographically least witness of that size.

    Sizes below the component count are skipped (each component needs a
    seed). The witness and sets_tested do not depend on parallelism.
    """
    opts = opts or SearchOptions()
    budget = _Budget(opts.budget_ms)

    if d.strand_count == 0:
        return WirtingerResult(omega=0, witness=(), sets_tested=0, elapsed=budget.elapsed)

    masks = crossing_masks(d)
    full = full_mask(d)
    forced = d.closed_strands
    free = tuple(s for s in range(d.strand_count) if s not in forced)
    k_start = max(1, d.component_count, len(forced))

    if opts.parallelism > 1:
        with ProcessPoolExecutor(
            max_workers=opts.parallelism,
            initializer=_init_worker,
            initargs=(masks, full),
        ) as pool:
            return _search(d, opts, budget, masks, full, forced, free, k_start, pool)
    return _search(d, opts, budget, masks, full, forced, free, k_start, None)


def _search(
    d: Diagram,
    opts: SearchOptions,
    budget: _Budget,
    masks: CrossingMasks,
    full: int,
    forced: tuple[int, ...],
    free: tuple[int, ...],
    k_start: int,
    pool: Optional[ProcessPoolExecutor],
) -> SearchOutcome:
    tested = 0
    for k in range(k_start, d.strand_count + 1):
        if opts.cutoff_k is not None and k > opts.cutoff_k:
            logger.info("Cutoff reached: omega > %s", opts.cutoff_k)
            return BoundedResult(
                exceeds=opts.cutoff_k, reason="cutoff",
                sets_tested=tested, elapsed=budget.elapsed,
            )

        total = comb(len(free), k - len(forced))
        logger.debug("Testing %s seed sets of size %s", total, k)
        candidates = _candidates(forced, free, k)
        if pool is None:
            found, scanned = _scan_sequential(candidates, masks, full, budget)
        else:
            found, scanned = _scan_parallel(candidates, pool, opts, budget)

        tested += scanned
        if found is not None:
            logger.info("omega=%s witness=%s after %s sets", k, found, tested)
            return WirtingerResult(
                omega=k, witness=found, sets_tested=tested, elapsed=budget.elapsed,
            )
        if budget.exhausted():
            # a finished level rules out k itself
            known = k if scanned == total else k - 1
            logger.warning("Time budget exhausted: omega > %s", known)
            return BoundedResult(
                exceeds=known, reason="time_budget",
                sets_tested=tested, elapsed=budget.elapsed,
            )

    # unreachable: the full strand set always generates
    raise RuntimeError("Seed search exhausted without a generating set")


def _scan_sequential(
    candidates: Iterator[tuple[int, ...]],
    masks: CrossingMasks,
    full: int,
    budget: _Budget,
) -> tuple[Optional[tuple[int, ...]], int]:
    scanned = 0
    for seeds in candidates:
        scanned += 1
        if closure_mask(masks, _bits(seeds)) == full:
            return seeds, scanned
        if scanned % _BUDGET_CHECK_EVERY == 0 and budget.exhausted():
            break
    return None, scanned


def _scan_parallel(
    candidates: Iterator[tuple[int, ...]],
    pool: ProcessPoolExecutor,
    opts: SearchOptions,
    budget: _Budget,
) -> tuple[Optional[tuple[int, ...]], int]:
    """
    Chunks are resolved in submission order, so the first hit is the
    lexicographic minimum; later chunks are cancelled.
    """
    window: deque[tuple[list[tuple[int, ...]], Future]] = deque()
    max_pending = opts.parallelism * 4
    scanned = 0
    exhausted = False

    try:
        while True:
            while not exhausted and len(window) < max_pending:
                chunk = list(islice(candidates, opts.chunk_size))
                if not chunk:
                    exhausted = True
                    break
                window.append((chunk, pool.submit(_scan_chunk, [_bits(s) for s in chunk])))
            if not window:
                return None, scanned

            chunk, future = window.popleft()
            index = future.result()
            if index is not None:
                return chunk[index], scanned + index + 1
            scanned += len(chunk)
            if budget.exhausted():
                return None, scanned
    finally:
        for _, future in window:
            future.cancel()


def omega_upper_bound(d: Diagram) -> int:
    """
    c(D) - 1 for knot diagrams with at least two crossings.
    Seeding every strand but one that meets a crossing it does not
    pass over already generates.
    """
    if not d.is_knot or d.crossing_count < 2:
        raise NotApplicable(
            f"Needs one component and >= 2 crossings, got "
            f"{d.component_count} component(s), {d.crossing_count} crossing(s)"
        )
    return d.crossing_count - 1
