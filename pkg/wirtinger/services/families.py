# wirtinger/services/families.py
"""
Gauss codes for infinite knot families, built by walking a projection.

Two families are covered:
  - two-bridge knots, as the plat closure of the 4-braid
    s2^a1 s1^a2 s2^a3 ... for an odd-length continued fraction [a1, ..., am]
  - pretzel knots P(p1, ..., pr), one vertical twist column per entry

Over/under is assigned by alternating along the walk, so every code is
the reduced alternating diagram of its projection.
"""
import logging
from typing import Iterator, Sequence

from wirtinger.core.exceptions import ValidationError
from wirtinger.models.diagram import GaussCode
from wirtinger.services.codec import normalize_components

logger = logging.getLogger(__name__)

_CAP = {1: 2, 2: 1, 3: 4, 4: 3}


def _alternate(visits: Sequence[int]) -> GaussCode:
    # Crossing visits of a planar curve sit at positions of opposite parity.
    return normalize_components([[c if i % 2 else -c for i, c in enumerate(visits)]])


# ── Two-bridge knots ──────────────────────────────────────────────────────────

def continued_fraction(terms: Sequence[int]) -> tuple[int, int]:
    """
    (p, q) with p/q = a1 + 1/(a2 + 1/(... + 1/am)).

    Examples:
        [3]       → (3, 1)
        [2, 1, 1] → (5, 2)
    """
    p, q = terms[-1], 1
    for a in reversed(terms[:-1]):
        p, q = a * p + q, p
    return p, q


def fraction_class(p: int, q: int) -> int:
    """Smallest q' with K(p/q') equal to K(p/q) or its mirror."""
    q %= p
    inverse = pow(q, -1, p)
    return min(q, inverse, (-q) % p, (-inverse) % p)


def _plat_visits(word: Sequence[int]) -> list[int]:
    """Crossing labels met walking the plat closure of `word` (left position of each generator)."""
    levels = len(word)
    pos, level, down = 1, 0, True
    visits: list[int] = []
    while True:
        if down and level == levels:
            pos, down = _CAP[pos], False
        elif not down and level == 0:
            pos, down = _CAP[pos], True
        else:
            index = level if down else level - 1
            g = word[index]
            if pos in (g, g + 1):
                visits.append(index + 1)
                pos = 2 * g + 1 - pos
            level += 1 if down else -1
        if (pos, level, down) == (1, 0, True):
            return visits


def two_bridge_gauss(terms: Sequence[int]) -> GaussCode:
    """
    Alternating plat diagram of the two-bridge knot with continued fraction `terms`.

    Examples:
        [3]       → [-3,2,-1,3,-2,1]            trefoil
        [2, 1, 1] → figure-eight, 4 crossings
    """
    if not terms or len(terms) % 2 == 0 or min(terms) < 1:
        raise ValidationError(f"Need an odd-length list of positive terms, got {list(terms)}")

    word = [g for j, a in enumerate(terms) for g in [2 if j % 2 == 0 else 1] * a]
    visits = _plat_visits(word)
    if len(visits) != 2 * len(word):
        p, q = continued_fraction(terms)
        raise ValidationError(f"Continued fraction {list(terms)} gives the two-bridge link {p}/{q}, not a knot")
    return _alternate(visits)


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def two_bridge_knots(max_crossings: int, min_crossings: int = 3) -> Iterator[tuple[str, GaussCode]]:
    """
    One alternating diagram per two-bridge knot, up to mirror image, named `2b(p/q)`.

    Knots come in crossing-number order; within a crossing number the first
    odd-length continued fraction in lexicographic order represents its class.
    """
    for n in range(max(min_crossings, 3), max_crossings + 1):
        seen: set[tuple[int, int]] = set()
        for terms in _compositions(n):
            if len(terms) % 2 == 0:
                continue
            p, q = continued_fraction(terms)
            if p % 2 == 0:
                continue
            key = (p, fraction_class(p, q))
            if key in seen:
                continue
            seen.add(key)
            yield f"2b({p}/{key[1]})", two_bridge_gauss(terms)
        logger.debug("%d two-bridge knot(s) with %d crossings", len(seen), n)


# ── Pretzel knots ─────────────────────────────────────────────────────────────

def pretzel_gauss(tangles: Sequence[int]) -> GaussCode:
    """
    Alternating diagram of the pretzel knot P(p1, ..., pr), all pi >= 1.

    Column c holds crossings labelled in order from its top. The right end
    of column c joins the left end of column c + 1, cyclically, at the top
    and at the bottom.

    Examples:
        (1, 1, 1) → trefoil
        (2, 3, 3) → 8 crossings, bridge number 3
    """
    if len(tangles) < 2 or min(tangles) < 1:
        raise ValidationError(f"Need at least two positive twist counts, got {list(tangles)}")

    columns = len(tangles)
    offsets = [sum(tangles[:c]) for c in range(columns)]
    start = (0, 0, True)
    col, side, from_top = start
    visits: list[int] = []
    while True:
        twists = tangles[col]
        steps = range(1, twists + 1) if from_top else range(twists, 0, -1)
        visits.extend(offsets[col] + k for k in steps)
        side ^= twists % 2
        col, side = ((col + 1) % columns, 0) if side else ((col - 1) % columns, 1)
        from_top = not from_top
        if (col, side, from_top) == start:
            break

    if len(visits) != 2 * sum(tangles):
        raise ValidationError(f"P{tuple(tangles)} is a link, not a knot")
    return _alternate(visits)


def pretzel_name(tangles: Sequence[int]) -> str:
    return "P(" + ",".join(str(t) for t in tangles) + ")"
