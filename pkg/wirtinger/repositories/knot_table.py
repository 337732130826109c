# wirtinger/repositories/knot_table.py
from importlib import resources
from pathlib import Path

from wirtinger.repositories.base import CsvRepository
from wirtinger.schemas.tabulate import KnotRow, KnownBridgeRow


def bundled_table() -> Path:
    """Path of the knot table shipped with the package."""
    return Path(str(resources.files("wirtinger.data").joinpath("knots.csv")))


class KnotTableRepository(CsvRepository[KnotRow]):
    model = KnotRow
    required_columns = ("name", "gauss")


class KnownBridgeRepository(CsvRepository[KnownBridgeRow]):
    model = KnownBridgeRow
    required_columns = ("name", "known_bridge")

    def read_map(self, path: Path | str) -> dict[str, int]:
        """name → known bridge number; rows without a value are left out."""
        return {
            row.name: row.known_bridge
            for row in self.read(path)
            if row.known_bridge is not None
        }
