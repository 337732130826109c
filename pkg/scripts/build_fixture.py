# scripts/build_fixture.py
"""
Print the generated rows of the bundled knot table.

Every two-bridge knot with 8 to 10 crossings (bridge number 2), then the
alternating pretzel knots with three tangles and at most 10 crossings
(bridge number 3). Hand-checked rows are kept at the top of the file.

Usage:
    python scripts/build_fixture.py >> wirtinger/data/knots.csv
"""
import csv
import sys

from wirtinger.services.codec import emit_gauss
from wirtinger.services.families import pretzel_gauss, pretzel_name, two_bridge_knots

PRETZELS = [(2, 3, 3), (3, 3, 3), (2, 3, 5), (3, 3, 4)]


def generated_rows() -> list[list[str]]:
    rows = [[name, emit_gauss(code), "2", "", "true"] for name, code in two_bridge_knots(10, min_crossings=8)]
    rows += [[pretzel_name(t), emit_gauss(pretzel_gauss(t)), "3", "", "true"] for t in PRETZELS]
    return rows


def main() -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    for row in generated_rows():
        writer.writerow(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
