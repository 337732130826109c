# wirtinger/repositories/base.py
import csv
import logging
from pathlib import Path
from typing import Generic, Iterable, TypeVar

from pydantic import BaseModel
from pydantic import ValidationError as SchemaValidationError

from wirtinger.core.exceptions import MalformedHeader, UnreadableInput, ValidationError

logger = logging.getLogger(__name__)

RowT = TypeVar("RowT", bound=BaseModel)


class CsvRepository(Generic[RowT]):
    """
    Generic CSV table mapped onto a pydantic row model.

    Usage:
        class KnotTableRepository(CsvRepository[KnotRow]):
            model = KnotRow
            required_columns = ("name", "gauss")
    """

    model: type[RowT]
    required_columns: tuple[str, ...] = ()

    @property
    def columns(self) -> tuple[str, ...]:
        return tuple(self.model.model_fields)

    def read_raw(self, path: Path | str) -> list[dict[str, str]]:
        """
        Return rows as stripped string dicts after checking the header.
        Cells are not validated here so one bad row cannot sink a table.
        """
        path = Path(path)
        try:
            with path.open(newline="", encoding="utf-8") as handle:
                reader = csv.DictReader(handle, skipinitialspace=True)
                header = [(h or "").strip() for h in reader.fieldnames or []]
                missing = [c for c in self.required_columns if c not in header]
                if missing:
                    raise MalformedHeader(f"{path.name}: missing column(s) {missing}")
                reader.fieldnames = header
                rows = [
                    {k: (v or "").strip() for k, v in row.items() if k}
                    for row in reader
                    if any((v or "").strip() for v in row.values() if isinstance(v, str))
                ]
        except (OSError, UnicodeDecodeError, csv.Error) as exc:
            raise UnreadableInput(f"Cannot read {path}: {exc}") from exc

        logger.debug("Read %s row(s) from %s", len(rows), path)
        return rows

    def read(self, path: Path | str) -> list[RowT]:
        rows = []
        for line, raw in enumerate(self.read_raw(path), start=2):
            try:
                rows.append(self.model.model_validate(raw))
            except SchemaValidationError as exc:
                msg = exc.errors()[0].get("msg", "invalid row")
                raise ValidationError(f"{Path(path).name} row {line}: {msg}") from exc
        return rows

    def write(self, path: Path | str, rows: Iterable[RowT]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(self.columns)
            for row in rows:
                data = row.model_dump(mode="json")
                writer.writerow(["" if data[c] is None else data[c] for c in self.columns])
        return path
