# tests/test_tabulate.py
import json

import pytest

from tests.conftest import TREFOIL
from wirtinger.core.exceptions import MalformedHeader, UnreadableInput, ValidationError
from wirtinger.repositories.knot_table import KnotTableRepository, KnownBridgeRepository
from wirtinger.repositories.results import ResultsRepository, output_paths
from wirtinger.schemas.tabulate import BatchOptions, Status
from wirtinger.services.tabulate import TabulationService, classify, compare_known, run_batch, tabulate_row

OPTIONS = BatchOptions(record_timings=False)


def _write(path, text: str):
    path.write_text(text, encoding="utf-8")
    return path


@pytest.fixture
def table(tmp_path):
    return _write(
        tmp_path / "knots.csv",
        "name,gauss,known_bridge,known_volume,alternating\n"
        f'3_1,"{TREFOIL}",2,,true\n'
        '4_1,"[1,-2,3,-4,2,-1,4,-3]",2,2.0298832128,true\n'
        'bad,"[1,2]",2,,\n'
        'hopf,"[1,-2];[-1,2]",,,\n',
    )


# ── classify ──────────────────────────────────────────────────────────────────

@pytest.mark.parametrize(
    "args, status",
    [
        ((2, 2), Status.MATCH),
        ((2, None), Status.UPPER_BOUND_ONLY),
        ((3, 2), Status.UPPER_BOUND_ONLY),
        ((2, 3), Status.MISMATCH),
        ((None, 2), Status.SKIPPED),
        ((2, 1, 3, 1), Status.MISMATCH),
        ((2, 1, 2, 2), Status.MISMATCH),
        ((1, 1, 0, 1), Status.MATCH),
        ((1, 1, 1, 1), Status.MATCH),
        ((1, 1, 2, 1), Status.MATCH),
    ],
)
def test_classify(args, status):
    assert classify(*args)[0] is status


def test_strict_upper_bound_warns():
    status, warning = classify(3, 2)
    assert status is Status.UPPER_BOUND_ONLY
    assert "exceeds" in warning


# ── single rows ───────────────────────────────────────────────────────────────

def test_row_trefoil():
    record = tabulate_row({"name": "3_1", "gauss": TREFOIL, "known_bridge": "2"}, OPTIONS)
    assert record.status is Status.MATCH
    assert record.omega == 2
    assert record.witness == ["a", "b"]
    assert (record.crossings, record.components) == (3, 1)
    assert (record.twist_number, record.bound_2t) == (1, 2)
    assert record.checks.passed(2)
    assert record.checks.label(2) == "pass"
    assert record.elapsed_ms == 0
    assert record.volume_ok is None


def test_row_volume_check():
    raw = {"name": "4_1", "gauss": "[1,-2,3,-4,2,-1,4,-3]", "known_bridge": "2",
           "known_volume": "2.0298832128", "alternating": "true"}
    assert tabulate_row(raw, OPTIONS).volume_ok is True


def test_row_unparseable_is_skipped():
    record = tabulate_row({"name": "bad", "gauss": "[1,2]"}, OPTIONS)
    assert record.status is Status.SKIPPED
    assert record.diagnostic.startswith("UnbalancedCrossing")


def test_row_invalid_cell_is_skipped():
    record = tabulate_row({"name": "x", "gauss": TREFOIL, "known_bridge": "two"}, OPTIONS)
    assert record.status is Status.SKIPPED
    assert record.diagnostic.startswith("ValidationError")


def test_row_cutoff_is_skipped():
    options = BatchOptions(cutoff_k=1, record_timings=False)
    record = tabulate_row({"name": "3_1", "gauss": TREFOIL, "known_bridge": "2"}, options)
    assert record.status is Status.SKIPPED
    assert record.omega is None
    assert record.diagnostic == "omega > 1 (cutoff)"


@pytest.mark.parametrize("gauss", ["[1,-1]", "[1,-2,2,-1]"])
def test_unknot_with_crossings_matches_bridge_one(gauss):
    record = tabulate_row({"name": "kink", "gauss": gauss, "known_bridge": "1"}, OPTIONS)
    assert record.omega == 1
    assert record.status is Status.MATCH
    assert record.diagnostic is None


def test_cut_split_row_label():
    record = tabulate_row({"name": "hopf", "gauss": "[1,-2];[-1,2]", "known_bridge": "2"}, OPTIONS)
    assert record.status is Status.MATCH
    assert record.checks.label(record.omega) == "pass (cut-split)"


# ── batches and files ─────────────────────────────────────────────────────────

def test_run_batch_keeps_input_order(table):
    records = run_batch(table, OPTIONS)
    assert [r.name for r in records] == ["3_1", "4_1", "bad", "hopf"]
    assert [r.status for r in records] == [
        Status.MATCH, Status.MATCH, Status.SKIPPED, Status.UPPER_BOUND_ONLY,
    ]


def test_parallel_batch_matches(table):
    sequential = run_batch(table, OPTIONS)
    parallel = run_batch(table, BatchOptions(jobs=2, record_timings=False))
    assert [r.model_dump() for r in parallel] == [r.model_dump() for r in sequential]


def test_missing_file(tmp_path):
    with pytest.raises(UnreadableInput):
        run_batch(tmp_path / "nope.csv", OPTIONS)


def test_header_without_gauss(tmp_path):
    path = _write(tmp_path / "t.csv", "name,code\n3_1,x\n")
    with pytest.raises(MalformedHeader):
        run_batch(path, OPTIONS)


def test_empty_file_has_no_header(tmp_path):
    with pytest.raises(MalformedHeader):
        KnotTableRepository().read_raw(_write(tmp_path / "t.csv", ""))


def test_blank_lines_ignored(tmp_path):
    path = _write(tmp_path / "t.csv", f'name,gauss\n\n3_1,"{TREFOIL}"\n,\n')
    assert len(KnotTableRepository().read_raw(path)) == 1


def test_typed_read_reports_row(tmp_path):
    path = _write(tmp_path / "k.csv", "name,known_bridge\n3_1,2\n4_1,x\n")
    with pytest.raises(ValidationError) as exc:
        KnownBridgeRepository().read(path)
    assert "row 3" in exc.value.detail


def test_save_writes_csv_and_json(table, tmp_path):
    service = TabulationService(OPTIONS)
    records = service.run_batch(table)
    csv_path, json_path = service.save(tmp_path / "out" / "results", records)
    assert (csv_path.name, json_path.name) == ("results.csv", "results.json")

    lines = csv_path.read_text().splitlines()
    assert lines[0] == "name,crossings,components,omega,witness,twist_number,bound_2t,checks,status,elapsed_ms"
    assert lines[1] == "3_1,3,1,2,a b,1,2,pass,MATCH,0"

    payload = json.loads(json_path.read_text())
    assert len(payload) == 4
    assert all(item["schema"] == 1 for item in payload)
    assert payload[0]["witness"] == ["a", "b"]

    loaded = ResultsRepository().load_records(csv_path)
    assert [(r.name, r.omega, r.status) for r in loaded] == [(r.name, r.omega, r.status) for r in records]


def test_output_paths():
    assert output_paths("x/res.json") == output_paths("x/res")
    assert output_paths("x/res")[0].name == "res.csv"


def test_saved_files_are_reproducible(table, tmp_path):
    service = TabulationService(OPTIONS)
    first = service.save(tmp_path / "a", service.run_batch(table))
    second = service.save(tmp_path / "b", TabulationService(BatchOptions(jobs=2, record_timings=False)).run_batch(table))
    for one, two in zip(first, second):
        assert one.read_bytes() == two.read_bytes()


# ── comparison ────────────────────────────────────────────────────────────────

def test_compare_known(table, tmp_path):
    records = run_batch(table, OPTIONS)
    known = _write(tmp_path / "known.csv", "name,known_bridge\n3_1,2\n4_1,3\nhopf,\n")
    report = compare_known(records, known)
    assert [row.status for row in report.rows] == [
        Status.MATCH, Status.MISMATCH, Status.SKIPPED, Status.UPPER_BOUND_ONLY,
    ]
    assert report.counts[Status.MISMATCH] == 1
    assert not report.ok


def test_corrupted_trefoil_fails(table, tmp_path):
    records = run_batch(table, OPTIONS)
    known = _write(tmp_path / "known.csv", "name,known_bridge\n3_1,1\n")
    report = compare_known(records, known)
    assert report.rows[0].status is Status.MISMATCH
    assert not report.ok
