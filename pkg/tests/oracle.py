# tests/oracle.py
"""
Brute-force Wirtinger number, written from the coloring rule alone.
Reads Gauss text itself and shares no code with the package.
"""
import json
from itertools import combinations


def _components(text: str) -> list[list[int]]:
    return [json.loads(chunk) for chunk in text.split(";")]


def _strands(components: list[list[int]]) -> list[list[int]]:
    """Visit lists per strand, cut at undercrossings, numbered like the package."""
    strands = []
    for entries in components:
        cuts = [i for i, v in enumerate(entries) if v < 0]
        if not cuts:
            strands.append(list(entries))
            continue
        n = len(entries)
        for j, start in enumerate(cuts):
            stop = cuts[(j + 1) % len(cuts)]
            length = (stop - start) % n or n
            strands.append([entries[(start + step) % n] for step in range(length + 1)])
    return strands


def _crossing_table(text: str) -> tuple[int, list[tuple[int, int, int]]]:
    strands = _strands(_components(text))
    over, ends, starts = {}, {}, {}
    for sid, visits in enumerate(strands):
        closed = not any(v < 0 for v in visits)
        inner = visits if closed else visits[1:-1]
        for v in inner:
            if v > 0:
                over[v] = sid
        if not closed:
            starts[-visits[0]] = sid
            ends[-visits[-1]] = sid
    return len(strands), [(over[c], ends[c], starts[c]) for c in sorted(over)]


def closure(table: list[tuple[int, int, int]], seeds: set[int]) -> set[int]:
    colored = set(seeds)
    grew = True
    while grew:
        grew = False
        for o, left, right in table:
            if o in colored and (left in colored) != (right in colored):
                colored |= {left, right}
                grew = True
    return colored


def brute_omega(text: str) -> tuple[int, tuple[int, ...]]:
    """(omega, lexicographically least witness) by trying every subset."""
    count, table = _crossing_table(text)
    if count == 0:
        return 0, ()
    for k in range(1, count + 1):
        for seeds in combinations(range(count), k):
            if len(closure(table, set(seeds))) == count:
                return k, seeds
    raise AssertionError("full strand set must generate")


def generates(text: str, seeds) -> bool:
    count, table = _crossing_table(text)
    return len(closure(table, set(seeds))) == count
