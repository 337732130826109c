# wirtinger/services/bounds.py
import logging
import math
from collections import Counter
from typing import Optional, Sequence

import networkx as nx
from networkx.utils import UnionFind

from wirtinger.core.exceptions import NoCrossings, ValidationError
from wirtinger.models.diagram import Diagram
from wirtinger.schemas.bounds import TwistRegion, VolumeBound

logger = logging.getLogger(__name__)

# Volume of the regular ideal hyperbolic tetrahedron, 3 * Lobachevsky(pi/3).
# Re-derived numerically by scripts/derive_v3.py.
V3 = 1.0149416064096536
VOLUME_CONSTANT = V3 / 6


def _require_crossings(d: Diagram) -> None:
    if d.crossing_count == 0:
        raise NoCrossings()


def _edge_multiset(d: Diagram) -> Counter:
    """Projection edges as unordered crossing pairs, one per consecutive visit."""
    edges: Counter = Counter()
    for entries in d.code.components:
        n = len(entries)
        for i in range(n):
            a, b = abs(entries[i]), abs(entries[(i + 1) % n])
            if a != b:
                edges[(min(a, b), max(a, b))] += 1
    return edges


# ── Twist regions ─────────────────────────────────────────────────────────────

def twist_regions(d: Diagram) -> list[TwistRegion]:
    """
    Crossing pairs joined by two or more edges are bigons; bigons are
    unioned into chains. A bigon that would close a chain into a cycle
    is kept out of the chain and acts as its boundary.

    Examples:
        trefoil     → one region of 3 crossings
        figure-eight → regions (1, 2) and (3, 4)
        [1,-1]      → one singleton region
    """
    _require_crossings(d)
    bigons = sorted(pair for pair, count in _edge_multiset(d).items() if count >= 2)

    groups = UnionFind(range(1, d.crossing_count + 1))
    chain = nx.Graph()
    chain.add_nodes_from(range(1, d.crossing_count + 1))
    for a, b in bigons:
        if groups[a] == groups[b]:
            continue
        groups.union(a, b)
        chain.add_edge(a, b)

    regions = []
    for members in groups.to_sets():
        sub = chain.subgraph(members)
        start = min(n for n in sub.nodes if sub.degree(n) <= 1)
        order = tuple(nx.dfs_preorder_nodes(sub, start))
        regions.append(TwistRegion(
            crossings=order,
            bigons=tuple(sorted(tuple(sorted(edge)) for edge in sub.edges)),
        ))
    regions.sort(key=lambda region: min(region.crossings))
    logger.debug("%s twist region(s) from %s bigon pair(s)", len(regions), len(bigons))
    return regions


def twist_number(d: Diagram) -> int:
    return len(twist_regions(d))


def twist_seeding(d: Diagram, regions: Optional[Sequence[TwistRegion]] = None) -> frozenset[int]:
    """
    Strands that leave some twist region through a non-bigon edge, plus
    the least strand of any component left without one.
    """
    _require_crossings(d)
    if regions is None:
        regions = twist_regions(d)
    internal = {pair for region in regions for pair in region.bigons}

    seeds: set[int] = set()
    for strand in d.strands:
        labels = [abs(v) for v in strand.visits]
        steps = list(zip(labels, labels[1:]))
        if strand.closed or not steps:
            seeds.add(strand.id)
            continue
        if any(a == b or (min(a, b), max(a, b)) not in internal for a, b in steps):
            seeds.add(strand.id)

    for cycle in d.components:
        if not seeds.intersection(cycle):
            seeds.add(min(cycle))
    return frozenset(seeds)


def bridge_bound_from_twists(d: Diagram) -> int:
    """beta <= 2 t(D)."""
    return 2 * twist_number(d)


# ── Volume ────────────────────────────────────────────────────────────────────

def hyperbolic_floor(beta: int) -> float:
    return max(0.5 * V3 * (0.5 * beta - 2), 2 * V3)


def volume_lower_bound(beta_upper: int) -> VolumeBound:
    """C * beta with C = v3 / 6, plus the hyperbolic floor."""
    if beta_upper < 1:
        raise ValidationError(f"beta must be >= 1, got {beta_upper}")
    return VolumeBound(
        v3=V3,
        c_const=VOLUME_CONSTANT,
        beta_upper=beta_upper,
        lower_bound=VOLUME_CONSTANT * beta_upper,
        hyperbolic_floor=hyperbolic_floor(beta_upper),
    )


def check_volume(beta: int, volume: float) -> bool:
    """C * beta < vol for a hyperbolic alternating knot."""
    return volume_lower_bound(beta).lower_bound < volume and math.isfinite(volume)
