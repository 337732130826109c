from wirtinger.repositories.base import CsvRepository
from wirtinger.repositories.knot_table import KnotTableRepository, KnownBridgeRepository, bundled_table
from wirtinger.repositories.results import ResultsRepository, output_paths

__all__ = [
    "CsvRepository",
    "KnotTableRepository",
    "KnownBridgeRepository",
    "ResultsRepository",
    "bundled_table",
    "output_paths",
]
