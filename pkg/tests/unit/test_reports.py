import json

import pytest

from jack_vertex.reports import ReportStore


@pytest.mark.unit
def test_records_round_trip_in_sorted_order(tmp_path):
    store = ReportStore.for_suite(tmp_path, "pieri")
    store.add("b", {"status": "ok"})
    store.add("a", {"status": "fail"})
    store.add("b", {"status": "mismatch"})
    store.flush()

    data = json.loads(store.path.read_text(encoding="utf-8"))
    assert data["suite"] == "pieri"
    assert [r["key"] for r in data["records"]] == ["a", "b"]

    reloaded = ReportStore.for_suite(tmp_path, "pieri")
    assert len(reloaded) == 2
    assert "b" in reloaded
    assert reloaded.get("b")["status"] == "mismatch"
    assert [r["key"] for r in reloaded.with_status("fail")] == ["a"]


@pytest.mark.unit
def test_flush_without_changes_writes_nothing(tmp_path):
    store = ReportStore(tmp_path / "r.json", suite="dyson")
    store.flush()
    assert not (tmp_path / "r.json").exists()
    assert store.extend([("x", {}), ("y", {})]) == 2
    store.flush()
    assert store.keys() == ["x", "y"]


@pytest.mark.unit
def test_invalid_file_is_ignored(tmp_path):
    path = tmp_path / "r.json"
    path.write_text(json.dumps({"records": "nope"}), encoding="utf-8")
    assert len(ReportStore(path, suite="basis")) == 0
