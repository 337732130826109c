# tests/test_corpus.py
"""End-to-end checks over the bundled knot table and generated codes."""
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tests.oracle import brute_omega, generates
from wirtinger.repositories.knot_table import KnotTableRepository, bundled_table
from wirtinger.schemas.tabulate import BatchOptions, Status
from wirtinger.services.bounds import bridge_bound_from_twists, check_volume, twist_number, twist_seeding
from wirtinger.services.codec import diagram_from_text, emit_gauss
from wirtinger.services.coloring import (
    apply_move,
    colorable_set,
    extend_to_fixpoint,
    is_generating_system,
    iter_coloring_moves,
    seed_coloring,
)
from wirtinger.services.search import wirtinger_number
from wirtinger.services.tabulate import run_batch
from wirtinger.services.verify import count_local_maxima, reconstruct_morse_profile, verify_coloring

ROWS = KnotTableRepository().read(bundled_table())
IDS = [row.name for row in ROWS]
SMALL_ROWS = [row for row in ROWS if diagram_from_text(row.gauss).strand_count <= 7]


@lru_cache(maxsize=None)
def _witness(gauss: str) -> tuple[int, ...]:
    return wirtinger_number(diagram_from_text(gauss)).witness


@st.composite
def gauss_codes(draw, max_crossings: int = 6) -> str:
    """Balanced signed codes, not necessarily planar, sometimes split in two components."""
    n = draw(st.integers(min_value=1, max_value=max_crossings))
    labels = draw(st.permutations([*range(1, n + 1), *range(-n, 0)]))
    parts = [labels]
    if len(labels) > 2 and draw(st.booleans()):
        cut = draw(st.integers(min_value=1, max_value=len(labels) - 1))
        parts = [labels[:cut], labels[cut:]]
    return ";".join("[" + ",".join(map(str, part)) + "]" for part in parts)


def _strand_sets(d, min_size: int = 1, max_size: int = 3):
    return st.sets(
        st.integers(min_value=0, max_value=d.strand_count - 1),
        min_size=min_size,
        max_size=min(max_size, d.strand_count),
    )


def test_bundled_table_loads():
    assert len(ROWS) == 105
    assert {"3_1", "4_1", "8_17", "10_124", "P(2,3,3)", "P(3,3,3)"} <= set(IDS)
    assert sum(name.startswith("2b(") for name in IDS) == 81
    assert len(SMALL_ROWS) >= 14


@pytest.mark.parametrize("row", ROWS, ids=IDS)
def test_omega_equals_known_bridge(row):
    assert wirtinger_number(diagram_from_text(row.gauss)).omega == row.known_bridge


@pytest.mark.parametrize("row", [r for r in ROWS if r.known_bridge == 2], ids=lambda r: r.name)
def test_two_bridge_witness_is_two_strands(row):
    assert len(_witness(row.gauss)) == 2


@pytest.mark.parametrize("row", ROWS, ids=IDS)
def test_witness_coloring_properties(row):
    d = diagram_from_text(row.gauss)
    witness = _witness(row.gauss)
    res = extend_to_fixpoint(d, witness)
    report = verify_coloring(d, res)
    assert report.ok, report.violations
    assert count_local_maxima(reconstruct_morse_profile(d, res)) == len(witness)


@pytest.mark.parametrize("row", ROWS, ids=IDS)
def test_complete_coloring_takes_one_move_per_remaining_strand(row):
    d = diagram_from_text(row.gauss)
    assert d.strand_count == d.crossing_count
    witness = _witness(row.gauss)
    res = extend_to_fixpoint(d, witness)
    assert res.complete
    assert len(res.sequence.moves) == d.crossing_count - len(witness)


@pytest.mark.parametrize("row", ROWS, ids=IDS)
def test_twist_bound_chain(row):
    d = diagram_from_text(row.gauss)
    seeds = twist_seeding(d)
    bound = bridge_bound_from_twists(d)
    assert bound == 2 * twist_number(d)
    assert len(seeds) <= bound
    assert is_generating_system(d, sorted(seeds))
    assert len(_witness(row.gauss)) <= bound


@pytest.mark.parametrize("row", [r for r in ROWS if r.known_volume and r.alternating], ids=lambda r: r.name)
def test_volume_exceeds_constant_times_bridge(row):
    assert check_volume(row.known_bridge, row.known_volume)


@pytest.mark.parametrize("row", SMALL_ROWS, ids=[r.name for r in SMALL_ROWS])
def test_search_matches_brute_force(row):
    text = emit_gauss(diagram_from_text(row.gauss).code)
    result = wirtinger_number(diagram_from_text(text))
    assert (result.omega, result.witness) == brute_omega(text)


@pytest.mark.slow
def test_bundled_batch_all_match():
    records = run_batch(bundled_table(), BatchOptions(jobs=2, record_timings=False))
    assert [r.status for r in records] == [Status.MATCH] * len(ROWS)
    assert all(r.checks.passed(r.omega) for r in records)
    assert all(r.volume_ok in (True, None) for r in records)


# ── properties ────────────────────────────────────────────────────────────────

@settings(max_examples=100, deadline=None)
@given(text=gauss_codes())
def test_generated_codes_agree_with_brute_force(text):
    d = diagram_from_text(text)
    result = wirtinger_number(d)
    assert (result.omega, result.witness) == brute_omega(text)
    assert generates(text, result.witness)
    assert extend_to_fixpoint(d, result.witness).complete


@pytest.mark.parametrize("row", ROWS, ids=IDS)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_colorable_set_is_monotone(row, data):
    d = diagram_from_text(row.gauss)
    smaller = data.draw(_strand_sets(d))
    extra = data.draw(_strand_sets(d, min_size=0))
    assert colorable_set(d, sorted(smaller)) <= colorable_set(d, sorted(smaller | extra))


@pytest.mark.parametrize("row", ROWS, ids=IDS)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_witness_supersets_generate(row, data):
    d = diagram_from_text(row.gauss)
    seeds = sorted(set(_witness(row.gauss)) | data.draw(_strand_sets(d, min_size=0)))
    assert is_generating_system(d, seeds)
    res = extend_to_fixpoint(d, seeds)
    assert res.complete
    assert len(res.sequence.moves) == d.crossing_count - len(seeds)


def _random_replay(d, seeds, rng) -> frozenset[int]:
    state = seed_coloring(d, seeds)
    while moves := list(iter_coloring_moves(d, state)):
        state = apply_move(state, rng.choice(moves))
    return frozenset(state.colored)


@pytest.mark.parametrize("row", ROWS, ids=IDS)
@settings(max_examples=25, deadline=None)
@given(data=st.data(), rng=st.randoms(use_true_random=False))
def test_closure_is_order_independent(row, data, rng):
    d = diagram_from_text(row.gauss)
    seeds = sorted(data.draw(_strand_sets(d)))
    assert _random_replay(d, seeds, rng) == colorable_set(d, seeds)


def test_unbalanced_row_is_skipped(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text('name,gauss,known_bridge\nbad,"[-1,2,-2]",2\n', encoding="utf-8")
    (record,) = run_batch(path, BatchOptions(record_timings=False))
    assert record.status is Status.SKIPPED
    assert "UnbalancedCrossing" in record.diagnostic
