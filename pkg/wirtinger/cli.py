# wirtinger/cli.py
"""
wirt: Wirtinger numbers of knot and link diagrams.

Examples:
    wirt compute --gauss "[-1,3,-2,1,-3,2]"
    wirt verify --gauss "[-1,3,-2,1,-3,2]" --seeds a,b
    wirt bounds --gauss "[1,-2,3,-4,2,-1,4,-3]"
    wirt batch --output results/knots --jobs 4 --no-timings
    wirt compare --results results/knots.csv --known known.csv

Exit status: 0 success, 1 input or usage error, 2 a MISMATCH was found.
"""
import argparse
import logging
import sys
from collections import Counter
from typing import Optional, Sequence

from wirtinger import __version__
from wirtinger.core.config import settings
from wirtinger.core.exceptions import AppError
from wirtinger.repositories.knot_table import bundled_table
from wirtinger.repositories.results import ResultsRepository
from wirtinger.schemas.tabulate import BatchOptions, Status
from wirtinger.services.codec import diagram_from_text, emit_diagram
from wirtinger.services.diagram import DiagramService
from wirtinger.services.tabulate import TabulationService

logger = logging.getLogger("wirtinger.cli")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default WIRT_JOBS)")
    p.add_argument("--cutoff-k", type=int, default=None, help="give up past this many seeds")
    p.add_argument("--budget-ms", type=int, default=None, help="time budget per diagram")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="wirt", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="Wirtinger number of one diagram")
    p.add_argument("--gauss", required=True)
    p.add_argument("--json", action="store_true")
    _search_flags(p)

    p = sub.add_parser("verify", help="color from given seeds and check the coloring")
    p.add_argument("--gauss", required=True)
    p.add_argument("--seeds", required=True, help="comma-separated strand names, e.g. a,b")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bounds", help="twist regions, 2t bound, volume bound")
    p.add_argument("--gauss", required=True)
    p.add_argument("--json", action="store_true")
    _search_flags(p)

    p = sub.add_parser("dictionary", help="print the knot dictionary")
    p.add_argument("--gauss", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("batch", help="tabulate a knot-table CSV")
    p.add_argument("--input", default=None, help="knot CSV (default: bundled table)")
    p.add_argument("--output", required=True, help="writes <output>.csv and <output>.json")
    p.add_argument("--no-timings", action="store_true", help="write elapsed_ms as 0")
    _search_flags(p)

    p = sub.add_parser("compare", help="compare a results CSV with known bridge numbers")
    p.add_argument("--results", required=True)
    p.add_argument("--known", required=True)
    return ap


# ── Commands ──────────────────────────────────────────────────────────────────

def _compute(args: argparse.Namespace) -> int:
    service = DiagramService(args.jobs, args.cutoff_k, args.budget_ms)
    result = service.omega(args.gauss)
    if args.json:
        print(result.model_dump_json(indent=2))
    elif result.omega is None:
        print(f"omega > {result.exceeds} ({result.reason}); {result.sets_tested} sets tested")
    else:
        print(f"omega = {result.omega}")
        print(f"witness: {' '.join(result.witness) or '-'}")
        print(f"sets tested: {result.sets_tested}")
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    result = DiagramService().verify(args.gauss, args.seeds.split(","))
    if args.json:
        print(result.model_dump_json(indent=2))
        return EXIT_OK

    print(f"order: {' '.join(result.order)}")
    print("colors: " + ", ".join(f"{name}={color}" for name, color in result.colors.items()))
    if not result.complete:
        print("incomplete: seeds do not generate")
        return EXIT_OK

    report = result.report
    print(f"connectivity: {'ok' if report.connectivity_ok else 'FAIL'}")
    print(f"unique local max: {'ok' if report.unique_max_ok else 'FAIL'}")
    if report.cut_split:
        print("overstrand height: skipped (cut-split)")
    else:
        print(f"overstrand height: {'ok' if report.overstrand_height_ok else 'FAIL'}")
    for color, crossing in report.link_exception_crossings:
        print(f"exception: color {color} at crossing {crossing}")
    for violation in report.violations:
        print(f"  {violation}")
    if result.local_maxima is not None:
        print(f"local maxima: {result.local_maxima}")
    return EXIT_OK


def _bounds(args: argparse.Namespace) -> int:
    result = DiagramService(args.jobs, args.cutoff_k, args.budget_ms).bounds(args.gauss)
    if args.json:
        print(result.model_dump_json(indent=2))
        return EXIT_OK

    print(f"twist regions ({result.twist_number}):")
    for region in result.twist_regions:
        print("  " + " ".join(str(c) for c in region.crossings))
    print(f"bridge bound 2t = {result.bound_2t}")
    generates = "generates" if result.seeding_generates else "does NOT generate"
    print(f"twist seeding: {' '.join(result.seeding)} ({generates})")
    v = result.volume
    print(f"volume > C*{v.beta_upper} = {v.lower_bound:.10f}  (C = v3/6, v3 = {v.v3:.10f})")
    print(f"hyperbolic floor: {v.hyperbolic_floor:.10f}")
    return EXIT_OK


def _dictionary(args: argparse.Namespace) -> int:
    if args.json:
        print(DiagramService().dictionary(args.gauss).model_dump_json(indent=2))
    else:
        print(emit_diagram(diagram_from_text(args.gauss)))
    return EXIT_OK


def _batch(args: argparse.Namespace) -> int:
    options = BatchOptions(
        jobs=args.jobs or settings.JOBS,
        cutoff_k=args.cutoff_k if args.cutoff_k is not None else settings.CUTOFF_K,
        budget_ms=args.budget_ms if args.budget_ms is not None else settings.BUDGET_MS,
        record_timings=settings.RECORD_TIMINGS and not args.no_timings,
    )
    service = TabulationService(options)
    records = service.run_batch(args.input or bundled_table())
    csv_path, json_path = service.save(args.output, records)

    counts = Counter(r.status for r in records)
    print(f"{len(records)} row(s) → {csv_path}, {json_path}")
    for status in Status:
        print(f"  {status.value:<17} {counts.get(status, 0)}")
    return EXIT_MISMATCH if counts.get(Status.MISMATCH) else EXIT_OK


def _compare(args: argparse.Namespace) -> int:
    service = TabulationService()
    records = ResultsRepository().load_records(args.results)
    report = service.compare_known(records, args.known)

    for row in report.rows:
        omega = "-" if row.omega is None else row.omega
        known = "-" if row.known_bridge is None else row.known_bridge
        print(f"{row.name:<12} omega={omega:<3} known={known:<3} {row.status.value}")
    print(", ".join(f"{status.value}={n}" for status, n in report.counts.items()))
    return EXIT_OK if report.ok else EXIT_MISMATCH


_COMMANDS = {
    "compute": _compute,
    "verify": _verify,
    "bounds": _bounds,
    "dictionary": _dictionary,
    "batch": _batch,
    "compare": _compare,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.LOG_LEVEL,
        format="%(asctime)s %(levelname)s %(name)s — %(message)s",
        stream=sys.stderr,
    )
    try:
        return _COMMANDS[args.command](args)
    except AppError as exc:
        logger.debug("%s", type(exc).__name__, exc_info=True)
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
