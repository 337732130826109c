# wirtinger/repositories/results.py
import json
import logging
from pathlib import Path
from typing import Sequence

from wirtinger.repositories.base import CsvRepository
from wirtinger.schemas.tabulate import ResultRow, TabulationRecord

logger = logging.getLogger(__name__)


def output_paths(output: Path | str) -> tuple[Path, Path]:
    """`results`, `results.csv` or `results.json` → (results.csv, results.json)."""
    base = Path(output)
    if base.suffix.lower() in (".csv", ".json"):
        base = base.with_suffix("")
    return base.with_name(base.name + ".csv"), base.with_name(base.name + ".json")


class ResultsRepository(CsvRepository[ResultRow]):
    """Summary CSV plus the full JSON record array."""

    model = ResultRow
    required_columns = ("name", "omega", "status")

    def save(self, output: Path | str, records: Sequence[TabulationRecord]) -> tuple[Path, Path]:
        csv_path, json_path = output_paths(output)
        self.write(csv_path, (ResultRow.from_record(r) for r in records))

        payload = [r.model_dump(mode="json", by_alias=True) for r in records]
        json_path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        logger.info("Wrote %s record(s) to %s and %s", len(records), csv_path, json_path)
        return csv_path, json_path

    def load_records(self, path: Path | str) -> list[TabulationRecord]:
        return [row.to_record() for row in self.read(path)]
