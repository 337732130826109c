# tests/test_families.py
from collections import Counter

import pytest

from wirtinger.core.exceptions import ValidationError
from wirtinger.repositories.knot_table import KnotTableRepository, bundled_table
from wirtinger.services.codec import build_diagram, emit_gauss
from wirtinger.services.families import (
    continued_fraction,
    fraction_class,
    pretzel_gauss,
    pretzel_name,
    two_bridge_gauss,
    two_bridge_knots,
)
from wirtinger.services.search import wirtinger_number


# ── two-bridge ────────────────────────────────────────────────────────────────

@pytest.mark.parametrize("terms, fraction", [([3], (3, 1)), ([2, 1, 1], (5, 2)), ([1, 1, 6], (13, 7))])
def test_continued_fraction(terms, fraction):
    assert continued_fraction(terms) == fraction


def test_fraction_class_covers_inverse_and_mirror():
    # 5/2, 5/3 are the same knot up to mirror; 7/2 and 7/4 are inverses mod 7
    assert fraction_class(5, 2) == fraction_class(5, 3) == 2
    assert fraction_class(7, 4) == fraction_class(7, 2) == 2


def test_two_bridge_trefoil():
    assert emit_gauss(two_bridge_gauss([3])) == "[-3,2,-1,3,-2,1]"


def test_two_bridge_figure_eight():
    d = build_diagram(two_bridge_gauss([2, 1, 1]))
    assert d.crossing_count == 4
    assert wirtinger_number(d).omega == 2


@pytest.mark.parametrize("terms", [[], [2, 1], [3, 0, 1], [2], [2, 2, 2]])
def test_two_bridge_rejects_links_and_bad_terms(terms):
    with pytest.raises(ValidationError):
        two_bridge_gauss(terms)


def test_two_bridge_census():
    counts = Counter(code.crossing_count for _, code in two_bridge_knots(10))
    assert [counts[n] for n in range(3, 11)] == [1, 1, 2, 3, 7, 12, 24, 45]


def test_two_bridge_codes_alternate():
    for _, code in two_bridge_knots(8):
        (entries,) = code.components
        assert all((a > 0) != (b > 0) for a, b in zip(entries, entries[1:] + entries[:1]))


# ── pretzel ───────────────────────────────────────────────────────────────────

def test_pretzel_one_one_one_is_trefoil():
    assert emit_gauss(pretzel_gauss((1, 1, 1))) == "[-1,2,-3,1,-2,3]"


@pytest.mark.parametrize("tangles", [(2, 2, 3), (3,), (2, 0, 3)])
def test_pretzel_rejects_links_and_bad_tangles(tangles):
    with pytest.raises(ValidationError):
        pretzel_gauss(tangles)


def test_pretzel_is_three_bridge():
    d = build_diagram(pretzel_gauss((2, 3, 3)))
    assert d.crossing_count == 8
    assert wirtinger_number(d).omega == 3


def test_pretzel_name():
    assert pretzel_name((2, 3, 5)) == "P(2,3,5)"


# ── bundled table ─────────────────────────────────────────────────────────────

def test_bundled_generated_rows_are_reproducible():
    rows = {row.name: row.gauss for row in KnotTableRepository().read(bundled_table())}
    generated = {name: emit_gauss(code) for name, code in two_bridge_knots(10, min_crossings=8)}
    generated.update({pretzel_name(t): emit_gauss(pretzel_gauss(t)) for t in [(2, 3, 3), (3, 3, 3), (2, 3, 5), (3, 3, 4)]})
    assert len(generated) == 85
    assert {name: rows.get(name) for name in generated} == generated
