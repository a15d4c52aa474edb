import json
import shutil

from virtualcm.io import FIXTURE_DIR
from virtualcm.suite import format_table, run_fixture_suite


def test_shipped_fixtures_all_pass():
    rows = run_fixture_suite()
    assert rows and all(r.ok for r in rows), format_table(rows)
    assert {r.criterion for r in rows} == {1, 2, 3, 4, 5, 6, 7, 9}


def test_empty_directory(tmp_path):
    assert run_fixture_suite(tmp_path) == []


def test_corrupted_fixture_fails_its_row(tmp_path):
    for p in FIXTURE_DIR.glob("*.json"):
        shutil.copy(p, tmp_path)
    doc = json.loads((tmp_path / "example14_cert.json").read_text())
    doc["psi"] = [0, 1, 2, 3, 4, 2]  # y2_2 sent to y0: psi is no longer simplicial
    (tmp_path / "example14_cert.json").write_text(json.dumps(doc))
    rows = run_fixture_suite(tmp_path)
    bad = [r for r in rows if not r.ok]
    assert bad and all("example14" in r.name for r in bad)
    assert all(r.witness for r in bad)
    assert len(rows) == len(run_fixture_suite())


def test_partial_directory_skips_rows(tmp_path):
    shutil.copy(FIXTURE_DIR / "example14_delta.json", tmp_path)
    rows = run_fixture_suite(tmp_path)
    assert rows and all(r.ok for r in rows)
    assert all("example14" in r.name for r in rows)
