import json

import pytest

from genus3.exceptions import FixtureError
from genus3.schemas import TABLE_IDS, ClassificationRow
from genus3.services.fixtures import (
    default_fixture_path,
    list_tables,
    load_branches,
    load_cited_caps,
    load_delta_notes,
    load_fixture,
    write_fixture,
)


def _write(path, document):
    path.write_text(json.dumps(document), encoding="utf-8")
    return path


@pytest.mark.parametrize("table_id", TABLE_IDS)
def test_round_trip_is_lossless(table_id, tmp_path):
    rows = load_fixture(default_fixture_path(table_id))
    assert rows
    copy = write_fixture(rows, tmp_path / f"{table_id}.json")
    assert load_fixture(copy) == rows


def test_list_tables():
    tables = list_tables()
    assert set(tables) == set(TABLE_IDS)
    assert all(path.is_file() for path in tables.values())


def test_unknown_table_path():
    with pytest.raises(FixtureError, match="unknown table id"):
        default_fixture_path("3.25")


def test_missing_file(tmp_path):
    with pytest.raises(FixtureError, match="not found") as info:
        load_fixture(tmp_path / "absent.json")
    assert info.value.path == tmp_path / "absent.json"


def test_empty_file_has_no_rows(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text("  \n", encoding="utf-8")
    assert load_fixture(path) == []


def test_unknown_table_in_document(tmp_path):
    path = _write(tmp_path / "bad.json", {"table": "sextics", "rows": []})
    with pytest.raises(FixtureError, match="unknown table id: sextics"):
        load_fixture(path)


def test_missing_required_parameter_names_row_and_field(tmp_path):
    path = _write(tmp_path / "deg-t.json",
                  {"table": "deg-t", "rows": [{"key": "a", "parameters": {"degT": 1}}]})
    with pytest.raises(FixtureError) as info:
        load_fixture(path)
    assert info.value.row == "a"
    assert info.value.field == "degG"
    assert str(path) in str(info.value)


def test_invalid_row_value(tmp_path):
    path = _write(tmp_path / "veronese.json", {"table": "veronese", "rows": [
        {"key": "I", "parameters": {"g_C": 0, "e": 0, "b": 1, "d": 12}},
        {"key": "II", "parameters": {"g_C": "one", "e": 2, "b": -1, "d": 4}},
    ]})
    with pytest.raises(FixtureError) as info:
        load_fixture(path)
    assert info.value.row == "II"
    assert info.value.field.startswith("parameters.g_C")


def test_row_from_another_table(tmp_path):
    path = _write(tmp_path / "deg-t.json", {"table": "deg-t", "rows": [
        {"table": "veronese", "key": "a", "parameters": {}}]})
    with pytest.raises(FixtureError, match="belongs to table 'veronese'"):
        load_fixture(path)


def test_write_refuses_mixed_rows(tmp_path):
    rows = [ClassificationRow(table="deg-t", key="a"), ClassificationRow(table="veronese", key="I")]
    with pytest.raises(FixtureError):
        write_fixture(rows, tmp_path / "mixed.json")
    with pytest.raises(FixtureError):
        write_fixture([], tmp_path / "empty.json")


def test_write_empty_with_explicit_table(tmp_path):
    path = write_fixture([], tmp_path / "empty.json", table="deg-t")
    assert load_fixture(path) == []


def test_cited_caps():
    caps = load_cited_caps()
    assert caps.superset_degrees == [1, 2, 3]
    assert all(cap.citation for cap in caps.caps)
    assert [cap.entry_min for cap in caps.for_degree(7)] == [1]


def test_branches_and_notes():
    assert len(load_branches()) == 6
    notes = load_delta_notes()
    assert notes and all(1 <= note.d <= 4 for note in notes)
