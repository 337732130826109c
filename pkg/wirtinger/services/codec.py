# wirtinger/services/codec.py
import logging
import re
import string
from collections import Counter
from typing import Iterable, Optional, Sequence

from wirtinger.core.exceptions import EmptyInput, MalformedSyntax, UnbalancedCrossing, UnknownStrand
from wirtinger.models.diagram import Crossing, Diagram, GaussCode, Strand

logger = logging.getLogger(__name__)

_COMPONENT_RE = re.compile(r"^\[(?P<body>.*)\]$", re.DOTALL)
_TOKEN_RE = re.compile(r"[+-]?\d+")


# ── Parsing ───────────────────────────────────────────────────────────────────

def _parse_component(chunk: str, index: int) -> tuple[int, ...]:
    match = _COMPONENT_RE.match(chunk.strip())
    if not match:
        raise MalformedSyntax(f"Component {index + 1} is not a bracketed list: {chunk.strip()!r}")

    body = match.group("body").strip()
    if not body:
        return ()

    entries: list[int] = []
    for token in body.split(","):
        token = token.strip()
        if not _TOKEN_RE.fullmatch(token):
            raise MalformedSyntax(
                f"Unparseable token {token!r} in component {index + 1} "
                "(crossing decorations are not accepted)"
            )
        value = int(token)
        if value == 0:
            raise MalformedSyntax(f"Crossing label 0 in component {index + 1}")
        entries.append(value)
    return tuple(entries)


def normalize_components(components: Iterable[Sequence[int]]) -> GaussCode:
    """
    Validate signed visits and compact the label set onto 1..c.

    Relabelling keeps the numeric order of labels, so an already
    contiguous code is returned unchanged.

    Examples:
        [[-1, 5, -2, 1, -5, 2]] → [[-1, 3, -2, 1, -3, 2]]
        [[4, -9], [-4, 9]]      → [[1, -2], [-1, 2]]
    """
    frozen = [tuple(entries) for entries in components]

    signs = Counter(v for entries in frozen for v in entries)
    labels = sorted({abs(v) for entries in frozen for v in entries})
    for label in labels:
        if signs[label] != 1 or signs[-label] != 1:
            raise UnbalancedCrossing(
                f"Crossing {label} appears {signs[label]}x over and "
                f"{signs[-label]}x under; expected once each"
            )

    relabel = {label: new for new, label in enumerate(labels, start=1)}
    return GaussCode(
        components=tuple(
            tuple(relabel[abs(v)] if v > 0 else -relabel[abs(v)] for v in entries)
            for entries in frozen
        )
    )


def parse_gauss(text: str) -> GaussCode:
    """
    Parse `[±n, ±n, ...]` text, components joined by `;`.

    Examples:
        "[-1,3,-2,1,-3,2]" → one component, 3 crossings
        "[]"               → one crossing-free component
        "[1,-2];[-1,2]"    → Hopf diagram, 2 components
    """
    if text is None or not text.strip():
        raise EmptyInput()

    chunks = text.strip().split(";")
    components = [_parse_component(chunk, i) for i, chunk in enumerate(chunks)]
    return normalize_components(components)


def emit_gauss(code: GaussCode) -> str:
    """Inverse of parse_gauss: `[-1,3,-2];[...]` with no whitespace."""
    return ";".join(
        "[" + ",".join(str(v) for v in entries) + "]" for entries in code.components
    )


# ── Strand naming ─────────────────────────────────────────────────────────────

def _letter_name(index: int) -> str:
    letter = string.ascii_lowercase[index % 26]
    return letter if index < 26 else f"{letter}{index // 26}"


def _assign_names(strands: Sequence[Strand]) -> tuple[str, ...]:
    names: list[str] = []
    letters = closed = 0
    for strand in strands:
        if strand.closed:
            names.append(f"u{closed}")
            closed += 1
        else:
            names.append(_letter_name(letters))
            letters += 1
    return tuple(names)


def strand_names(d: Diagram, ids: Optional[Iterable[int]] = None) -> list[str]:
    """
    Display names of the given strand ids, in order; every strand when ids is None.

    Examples:
        (trefoil, None)   → [a, b, c]
        (trefoil, (2, 0)) → [c, a]
    """
    if ids is None:
        return list(d.names)
    return [d.names[sid] for sid in ids]


def resolve_strands(d: Diagram, names: Iterable[str]) -> list[int]:
    """
    Map display names (or bare integer ids) to strand ids, keeping order.
    Duplicates pass through; seed validation reports them.
    """
    lookup = {name: i for i, name in enumerate(d.names)}
    ids: list[int] = []
    for raw in names:
        name = raw.strip()
        if name in lookup:
            ids.append(lookup[name])
        elif name.isdigit() and int(name) < d.strand_count:
            ids.append(int(name))
        else:
            raise UnknownStrand(f"Unknown strand {name!r}")
    return ids


# ── Diagram construction ──────────────────────────────────────────────────────

def build_diagram(code: GaussCode) -> Diagram:
    """
    Cut every component at its undercrossings.

    Each strand runs from one negative entry to the next (cyclically);
    positive entries inside it make it the overstrand there. A component
    with no negative entry becomes one closed strand.
    """
    strands: list[Strand] = []
    over_of: dict[int, int] = {}
    ends_at: dict[int, int] = {}
    starts_at: dict[int, int] = {}
    components: list[tuple[int, ...]] = []

    for comp_index, entries in enumerate(code.components):
        unders = [i for i, v in enumerate(entries) if v < 0]

        if not unders:
            sid = len(strands)
            over = frozenset(entries)
            strands.append(Strand(
                id=sid, component=comp_index, position=0,
                visits=entries, over_at=over, closed=True,
            ))
            over_of.update({label: sid for label in entries})
            components.append((sid,))
            continue

        n = len(entries)
        members: list[int] = []
        for position, start in enumerate(unders):
            stop = unders[(position + 1) % len(unders)]
            span = (stop - start) % n or n
            visits = tuple(entries[(start + step) % n] for step in range(span + 1))
            sid = len(strands)
            over = frozenset(v for v in visits[1:-1] if v > 0)
            strands.append(Strand(
                id=sid, component=comp_index, position=position,
                visits=visits, over_at=over,
            ))
            over_of.update({label: sid for label in over})
            starts_at[-visits[0]] = sid
            ends_at[-visits[-1]] = sid
            members.append(sid)
        components.append(tuple(members))

    crossings = tuple(
        Crossing(id=label, over=over_of[label], under=(ends_at[label], starts_at[label]))
        for label in range(1, code.crossing_count + 1)
    )
    diagram = Diagram(
        code=code,
        strands=tuple(strands),
        crossings=crossings,
        dictionary={s.id: s.over_at for s in strands},
        components=tuple(components),
        names=_assign_names(strands),
    )
    logger.debug("Built %r", diagram)
    return diagram


def diagram_from_text(text: str) -> Diagram:
    return build_diagram(parse_gauss(text))


# ── Emitting ──────────────────────────────────────────────────────────────────

def emit_diagram(d: Diagram, separator: str = "\n") -> str:
    """
    Knot dictionary listing, one strand per entry in id order.

    Examples:
        trefoil → "a -> {(b,c)}\\nb -> {(a,c)}\\nc -> {(a,b)}"
        "[]"    → "u0 -> {} (closed curve)"
    """
    names = strand_names(d)
    entries: list[str] = []
    for strand in d.strands:
        pairs = []
        for label in sorted(strand.over_at):
            first, second = sorted(d.crossing(label).under)
            pairs.append("(" + ",".join(strand_names(d, (first, second))) + ")")
        line = f"{names[strand.id]} -> {{{', '.join(pairs)}}}"
        if strand.closed:
            line += " (closed curve)"
        entries.append(line)
    return separator.join(entries)
