# wirtinger/services/tabulate.py
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError as SchemaValidationError

from wirtinger.core.exceptions import AppError, PropertyViolation
from wirtinger.repositories.knot_table import KnotTableRepository, KnownBridgeRepository
from wirtinger.repositories.results import ResultsRepository
from wirtinger.schemas.search import BoundedResult, SearchOptions
from wirtinger.schemas.tabulate import (
    BatchOptions,
    CheckSummary,
    ComparisonReport,
    ComparisonRow,
    KnotRow,
    Status,
    TabulationRecord,
)
from wirtinger.services.bounds import check_volume, twist_number
from wirtinger.services.codec import build_diagram, parse_gauss, strand_names
from wirtinger.services.coloring import extend_to_fixpoint
from wirtinger.services.search import wirtinger_number
from wirtinger.services.verify import count_local_maxima, reconstruct_morse_profile, verify_coloring

logger = logging.getLogger(__name__)


def classify(
    omega: Optional[int],
    known: Optional[int],
    crossings: Optional[int] = None,
    components: Optional[int] = None,
) -> tuple[Status, Optional[str]]:
    """
    Status of one computed omega against a known bridge number.

    Examples:
        (2, 2)       → MATCH
        (2, 3)       → MISMATCH (omega(D) >= beta always)
        (3, 2)       → UPPER_BOUND_ONLY with a warning
        (2, 1, 3, 1) → MISMATCH (one-bridge means unknot, which has a crossing-free diagram)
        (1, 1, 1, 1) → MATCH (a kink diagram of the unknot)
    """
    if omega is None:
        return Status.SKIPPED, None
    if known is None:
        return Status.UPPER_BOUND_ONLY, None
    if omega < known:
        return Status.MISMATCH, f"omega {omega} below known bridge number {known}"
    if omega == known and (components is None or known >= components):
        return Status.MATCH, None
    if components is not None and known < components:
        return Status.MISMATCH, f"known bridge number {known} below component count {components}"
    if known == 1 and crossings:
        return Status.MISMATCH, "known bridge number 1 given for a diagram with crossings"
    if omega > known:
        return Status.UPPER_BOUND_ONLY, f"omega {omega} exceeds known bridge number {known} for this diagram"
    return Status.MATCH, None


def _check(d, witness: tuple[int, ...]) -> CheckSummary:
    res = extend_to_fixpoint(d, witness)
    report = verify_coloring(d, res)
    try:
        maxima = count_local_maxima(reconstruct_morse_profile(d, res))
    except PropertyViolation as exc:
        return CheckSummary(report=report, profile_error=exc.detail)
    return CheckSummary(report=report, local_maxima=maxima)


def tabulate_row(raw: dict[str, str], options: BatchOptions) -> TabulationRecord:
    """
    Compute one table row. Never raises: failures become SKIPPED records.
    Runs inside worker processes, so it takes plain dicts.
    """
    started = time.perf_counter()
    name = raw.get("name") or "<unnamed>"

    def elapsed_ms() -> int:
        return round((time.perf_counter() - started) * 1000) if options.record_timings else 0

    try:
        row = KnotRow.model_validate(raw)
    except SchemaValidationError as exc:
        message = exc.errors()[0].get("msg", "invalid row")
        return TabulationRecord(name=name, gauss=raw.get("gauss", ""), diagnostic=f"ValidationError: {message}")

    record = TabulationRecord(
        name=row.name,
        gauss=row.gauss,
        known_bridge=row.known_bridge,
        known_volume=row.known_volume,
    )
    try:
        d = build_diagram(parse_gauss(row.gauss))
    except AppError as exc:
        record.diagnostic = f"{type(exc).__name__}: {exc.detail}"
        record.elapsed_ms = elapsed_ms()
        return record

    record.crossings = d.crossing_count
    record.components = d.component_count
    if d.crossing_count:
        record.twist_number = twist_number(d)
        record.bound_2t = 2 * record.twist_number

    search = wirtinger_number(d, SearchOptions(cutoff_k=options.cutoff_k, budget_ms=options.budget_ms))
    if isinstance(search, BoundedResult):
        record.diagnostic = f"omega > {search.exceeds} ({search.reason})"
        record.elapsed_ms = elapsed_ms()
        return record

    record.omega = search.omega
    record.witness = strand_names(d, search.witness)
    if d.strand_count:
        record.checks = _check(d, search.witness)

    if row.known_volume is not None and row.known_bridge is not None and row.alternating:
        record.volume_ok = check_volume(row.known_bridge, row.known_volume)

    record.status, record.diagnostic = classify(
        record.omega, row.known_bridge, record.crossings, record.components
    )
    record.elapsed_ms = elapsed_ms()
    return record


class TabulationService:
    """Batch tabulation of knot tables and comparison with known bridge numbers."""

    def __init__(self, options: Optional[BatchOptions] = None) -> None:
        self.options = options or BatchOptions()
        self.tables = KnotTableRepository()
        self.known = KnownBridgeRepository()
        self.results = ResultsRepository()

    def run_batch(self, input_path: Path | str) -> list[TabulationRecord]:
        """
        One record per input row, in input order. Bad rows are SKIPPED.
        Raises UnreadableInput / MalformedHeader for the file itself.
        """
        rows = self.tables.read_raw(input_path)
        work = partial(tabulate_row, options=self.options)

        if self.options.jobs > 1 and len(rows) > 1:
            with ProcessPoolExecutor(max_workers=self.options.jobs) as pool:
                records = list(pool.map(work, rows))
        else:
            records = [work(row) for row in rows]

        for record in records:
            if record.status is Status.SKIPPED:
                logger.warning("Skipped %s: %s", record.name, record.diagnostic)
            elif record.status is Status.MISMATCH:
                logger.error("MISMATCH %s: %s", record.name, record.diagnostic)
            elif record.diagnostic:
                logger.warning("%s: %s", record.name, record.diagnostic)

        counts = Counter(r.status for r in records)
        logger.info("Tabulated %s row(s): %s", len(records), {s.value: n for s, n in counts.items()})
        return records

    def save(self, output: Path | str, records: Sequence[TabulationRecord]) -> tuple[Path, Path]:
        return self.results.save(output, records)

    def compare_known(self, records: Sequence[TabulationRecord], known_path: Path | str) -> ComparisonReport:
        """
        Recompute statuses against a name → bridge-number file.
        Names missing from the file are UPPER_BOUND_ONLY; skipped rows stay skipped.
        """
        known = self.known.read_map(known_path)
        rows = []
        for record in records:
            bridge = known.get(record.name)
            status, _ = classify(record.omega, bridge, record.crossings, record.components)
            rows.append(ComparisonRow(name=record.name, omega=record.omega, known_bridge=bridge, status=status))

        counts = Counter(row.status for row in rows)
        return ComparisonReport(rows=rows, counts={status: counts.get(status, 0) for status in Status})


# ── Module-level entry points ─────────────────────────────────────────────────

def run_batch(input_path: Path | str, options: Optional[BatchOptions] = None) -> list[TabulationRecord]:
    return TabulationService(options).run_batch(input_path)


def compare_known(records: Sequence[TabulationRecord], known_path: Path | str) -> ComparisonReport:
    return TabulationService().compare_known(records, known_path)
