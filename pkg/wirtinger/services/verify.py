# wirtinger/services/verify.py
import logging
from typing import Optional

import networkx as nx

from wirtinger.core.exceptions import (
    CutSplitInput,
    IncompleteColoring,
    NonLinearColorClass,
    NotCutSplit,
    PropertyViolation,
)
from wirtinger.models.coloring import ColoringResult
from wirtinger.models.diagram import Diagram
from wirtinger.schemas.verify import CriticalPoint, CutSplitReduction, MorseProfile, PropertyReport
from wirtinger.services.codec import build_diagram, normalize_components, strand_names

logger = logging.getLogger(__name__)


# ── Helpers ───────────────────────────────────────────────────────────────────

def _require_complete(d: Diagram, res: ColoringResult) -> None:
    if not res.complete or len(res.sequence.final_colors) != d.strand_count:
        raise IncompleteColoring()


def _heights(res: ColoringResult) -> dict[int, int]:
    return {sid: -(i + 1) for i, sid in enumerate(res.sequence.order)}


def _seed_of_color(res: ColoringResult) -> dict[int, int]:
    colors = res.sequence.final_colors
    return {colors[sid]: sid for sid in res.sequence.seeds}


def _classes(res: ColoringResult) -> dict[int, list[int]]:
    classes: dict[int, list[int]] = {}
    for sid, color in sorted(res.sequence.final_colors.items()):
        classes.setdefault(color, []).append(sid)
    return classes


def under_adjacency(d: Diagram) -> nx.Graph:
    """Strands joined when they are the two understrands of a crossing."""
    graph = nx.Graph()
    graph.add_nodes_from(range(d.strand_count))
    graph.add_edges_from(c.under for c in d.crossings if c.under[0] != c.under[1])
    return graph


def _ordered_class(d: Diagram, members: list[int]) -> tuple[list[int], bool]:
    """
    Order a color class along its component.
    Returns (strands, cyclic); cyclic when the class is a whole component.
    """
    components = {d.strand(sid).component for sid in members}
    if len(components) != 1:
        raise NonLinearColorClass(f"Color class {members} spans several components")

    cycle = d.components[components.pop()]
    if len(members) == len(cycle):
        return list(cycle), True

    inside = set(members)
    m = len(cycle)
    starts = [i for i in range(m) if cycle[i] in inside and cycle[i - 1] not in inside]
    if len(starts) != 1:
        raise NonLinearColorClass(f"Color class {members} is not a contiguous arc")

    arc = []
    i = starts[0]
    while cycle[i % m] in inside and len(arc) < m:
        arc.append(cycle[i % m])
        i += 1
    if len(arc) != len(members):
        raise NonLinearColorClass(f"Color class {members} is not a contiguous arc")
    return arc, False


def _local_maxima(strands: list[int], heights: dict[int, int], cyclic: bool) -> list[int]:
    n = len(strands)
    if n == 1:
        return list(strands)
    peaks = []
    for i, sid in enumerate(strands):
        neighbours = []
        if cyclic or i > 0:
            neighbours.append(strands[(i - 1) % n])
        if cyclic or i < n - 1:
            neighbours.append(strands[(i + 1) % n])
        if all(heights[sid] > heights[other] for other in neighbours if other != sid):
            peaks.append(sid)
    return peaks


# ── Property checks ───────────────────────────────────────────────────────────

def _connectivity_violations(d: Diagram, res: ColoringResult) -> list[str]:
    graph = under_adjacency(d)
    colors = res.sequence.final_colors
    k = res.sequence.seed_count
    order = res.sequence.order
    problems = []
    # a stage only changes the class of the strand it adds
    for stage in range(1, len(order) - k + 1):
        added = order[k + stage - 1]
        color = colors[added]
        members = [sid for sid in order[: k + stage] if colors[sid] == color]
        if not nx.is_connected(graph.subgraph(members)):
            names = strand_names(d, members)
            problems.append(f"stage {stage}: color {color} class {names} is disconnected")
    return problems


def check_connectivity(d: Diagram, res: ColoringResult) -> bool:
    """Every color class is connected under under-adjacency at every stage."""
    _require_complete(d, res)
    return not _connectivity_violations(d, res)


def _unique_max_violations(d: Diagram, res: ColoringResult) -> list[str]:
    heights = _heights(res)
    seeds = _seed_of_color(res)
    problems = []
    for color, members in _classes(res).items():
        strands, cyclic = _ordered_class(d, members)
        peaks = _local_maxima(strands, heights, cyclic)
        if peaks != [seeds.get(color)]:
            names = strand_names(d, peaks)
            problems.append(f"color {color}: local maxima at {names}, expected the seed only")
    return problems


def check_unique_local_max(d: Diagram, res: ColoringResult) -> bool:
    """Each color class has exactly one local height maximum: its seed."""
    _require_complete(d, res)
    return not _unique_max_violations(d, res)


def _overstrand_findings(
    d: Diagram, res: ColoringResult
) -> tuple[list[tuple[int, int]], list[str]]:
    """
    Returns (exceptions, violations) for the overstrand-height inequality.

    A failing crossing is an exception when its color class is a whole
    component and it is the only failing crossing of that class.
    """
    heights = _heights(res)
    colors = res.sequence.final_colors
    classes = _classes(res)
    failing: dict[int, list[int]] = {}

    for crossing in d.crossings:
        left, right = crossing.under
        if colors[left] != colors[right]:
            continue
        if heights[crossing.over] > min(heights[left], heights[right]):
            continue
        failing.setdefault(colors[left], []).append(crossing.id)

    exceptions: list[tuple[int, int]] = []
    violations: list[str] = []
    for color, crossings in sorted(failing.items()):
        members = classes[color]
        component = d.components[d.strand(members[0]).component]
        whole = sorted(component) == members
        if whole and len(crossings) == 1:
            exceptions.append((color, crossings[0]))
        else:
            violations.append(
                f"color {color}: overstrand not above understrands at crossing(s) {crossings}"
            )
    return exceptions, violations


def check_overstrand_height(d: Diagram, res: ColoringResult) -> PropertyReport:
    """
    At same-colored crossings the overstrand is higher than the lower
    understrand, apart from one recorded exception per monochromatic
    component.
    """
    _require_complete(d, res)
    if detect_cut_split(d) is not None:
        raise CutSplitInput("Overstrand heights are not constrained on cut-split diagrams")

    exceptions, violations = _overstrand_findings(d, res)
    return PropertyReport(
        overstrand_height_ok=not violations,
        link_exception_crossings=exceptions,
        violations=violations,
    )


def verify_coloring(d: Diagram, res: ColoringResult) -> PropertyReport:
    """
    All three checks in one report. Cut-split diagrams skip only the
    overstrand inequality and are marked cut_split.
    """
    _require_complete(d, res)
    violations = _connectivity_violations(d, res)
    connectivity_ok = not violations

    try:
        max_problems = _unique_max_violations(d, res)
    except NonLinearColorClass as exc:
        max_problems = [exc.detail]
    violations += max_problems

    cut_split = detect_cut_split(d) is not None
    exceptions: list[tuple[int, int]] = []
    height_problems: list[str] = []
    if not cut_split:
        exceptions, height_problems = _overstrand_findings(d, res)
    violations += height_problems

    return PropertyReport(
        connectivity_ok=connectivity_ok,
        unique_max_ok=not max_problems,
        overstrand_height_ok=not height_problems,
        cut_split=cut_split,
        link_exception_crossings=exceptions,
        violations=violations,
    )


# ── Morse profile ─────────────────────────────────────────────────────────────

def reconstruct_morse_profile(d: Diagram, res: ColoringResult) -> MorseProfile:
    """
    Walk each component: a max on every seed strand, a min of value
    -c(D)-1 wherever the walk changes color, and one min on every
    monochromatic component.
    """
    report = verify_coloring(d, res)
    if not report.ok:
        raise PropertyViolation("; ".join(report.violations))

    # cut-split components may carry their own exception crossing
    exceptions = dict(report.link_exception_crossings)
    if report.cut_split:
        exceptions = dict(_overstrand_findings(d, res)[0])
    exception_sites = set(exceptions.values())

    colors = res.sequence.final_colors
    heights = _heights(res)
    seeds = set(res.sequence.seeds)
    floor = -d.crossing_count - 1
    profile: list[tuple[CriticalPoint, ...]] = []

    for cycle in d.components:
        points: list[CriticalPoint] = []
        for i, sid in enumerate(cycle):
            if sid in seeds:
                points.append(CriticalPoint(kind="max", value=heights[sid], site_kind="strand", site=sid))
            connector = d.strand(sid).end_crossing
            if connector is None:
                continue
            following = cycle[(i + 1) % len(cycle)]
            if colors[sid] != colors[following] or connector in exception_sites:
                points.append(CriticalPoint(kind="min", value=floor, site_kind="crossing", site=connector))

        if not any(p.kind == "min" for p in points):
            points.append(_monochromatic_minimum(d, cycle, heights, floor))
        profile.append(tuple(points))

    result = MorseProfile(components=tuple(profile))
    for cycle, points in zip(d.components, result.components):
        kinds = [p.kind for p in points]
        alternating = all(kinds[i] != kinds[(i + 1) % len(kinds)] for i in range(len(kinds)))
        if not alternating or kinds.count("max") != kinds.count("min"):
            raise PropertyViolation(
                f"Critical points {kinds} on component {strand_names(d, cycle)} do not alternate"
            )
    return result


def _monochromatic_minimum(
    d: Diagram, cycle: tuple[int, ...], heights: dict[int, int], floor: int
) -> CriticalPoint:
    if len(cycle) == 1 and not d.strand(cycle[0]).closed:
        return CriticalPoint(kind="min", value=floor, site_kind="crossing", site=d.strand(cycle[0]).end_crossing)
    lowest = min(cycle, key=lambda sid: heights[sid])
    return CriticalPoint(kind="min", value=floor, site_kind="strand", site=lowest)


def count_local_maxima(p: MorseProfile) -> int:
    return p.maxima


# ── Cut-split diagrams ────────────────────────────────────────────────────────

def detect_cut_split(d: Diagram) -> Optional[int]:
    """Least strand that is a closed curve or an understrand twice at one crossing."""
    candidates = set(d.closed_strands)
    candidates.update(c.under[0] for c in d.crossings if c.under[0] == c.under[1])
    return min(candidates, default=None)


def reduce_cut_split(d: Diagram) -> CutSplitReduction:
    """
    Remove the splitting strand's component with all its crossings;
    the remaining visits keep their traversal order.
    omega(D) == omega(D') + 1.
    """
    sid = detect_cut_split(d)
    if sid is None:
        raise NotCutSplit()

    component = d.strand(sid).component
    removed = {abs(v) for v in d.code.components[component]}
    survivors = [
        tuple(v for v in entries if abs(v) not in removed)
        for i, entries in enumerate(d.code.components)
        if i != component
    ]
    reduced = build_diagram(normalize_components(survivors))
    logger.debug("Removed component %s (strand %s): %r", component, strand_names(d, [sid])[0], reduced)
    return CutSplitReduction(removed_strand=sid, removed_component=component, reduced=reduced)


def reduce_cut_split_fully(d: Diagram) -> tuple[Diagram, int]:
    """Reduce until no cut-split strand remains; omega(D) == omega(D') + count."""
    count = 0
    while detect_cut_split(d) is not None:
        d = reduce_cut_split(d).reduced
        count += 1
    return d, count
