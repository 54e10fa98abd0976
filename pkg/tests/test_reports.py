import csv
import io
import json

import pytest

from genus3.services import classify, oracle
from genus3.services.reports import (
    render_enumeration,
    render_oracle,
    render_records,
    render_report,
    render_verification,
)
from genus3.services.verification import verify_fixture


@pytest.fixture(scope="module")
def surfaces_report():
    return verify_fixture("surfaces")


def test_verification_table(surfaces_report):
    text = render_verification(surfaces_report)
    assert text.startswith("Table surfaces")
    assert "VII-3/e=1" in text and "[whitelisted]" in text
    assert text.rstrip().endswith("Exit status: 0")


def test_verification_json(surfaces_report):
    data = json.loads(render_verification(surfaces_report, "json"))
    assert data["exit_status"] == 0
    assert data["summary"]["discrepancy"] == 1


def test_verification_csv(surfaces_report):
    rows = list(csv.DictReader(io.StringIO(render_verification(surfaces_report, "csv"))))
    assert len(rows) == len(surfaces_report.verdicts)
    flagged = [row for row in rows if row["whitelisted"] == "True"]
    assert [row["key"] for row in flagged] == ["VII-3/e=1"]


def test_enumeration_renderings():
    result = classify.enumerate_quadric_splittings(12)
    table = render_enumeration(result)
    assert "(2,2,2,2)" in table
    assert "Admitted: 3 of" in table
    rows = list(csv.DictReader(io.StringIO(render_enumeration(result, "csv"))))
    assert {row["splitting"] for row in rows if row["status"] == "admitted"} == {
        "[1,1,3,3]", "[1,2,2,3]", "[2,2,2,2]"}
    assert json.loads(render_enumeration(result, "json"))["d"] == 12


def test_oracle_rendering_shows_counterexample():
    report = oracle.oracle_selftest(genera=[0], c1_values=[4], b_values=[0], ranks=[3, 4])
    text = render_oracle(report)
    assert "40 vs 24, FAILS" in text
    rows = list(csv.DictReader(io.StringIO(render_oracle(report, "csv"))))
    assert rows[0]["printed_identity_holds"] == "False"
    assert json.loads(render_oracle(report, "json"))["exit_status"] == 0


def test_records_renderings():
    solutions = classify.veronese_solutions()
    text = render_records(solutions, title="Veronese")
    lines = text.splitlines()
    assert lines[0] == "Veronese"
    assert lines[1].split("\t") == ["g_c", "e", "b", "d"]
    assert json.loads(render_records(solutions, "json"))[1]["d"] == 4
    assert render_records([], "json").strip() == "[]"


def test_render_report_dispatch(surfaces_report):
    assert render_report(surfaces_report, "json") == render_verification(surfaces_report, "json")
    reductions = json.loads(render_report(classify.reduction_tuples(), "json"))
    assert reductions[0]["veronese_blowup_bound"] == 3


def test_unknown_format(surfaces_report):
    with pytest.raises(ValueError):
        render_verification(surfaces_report, "xml")


@pytest.mark.parametrize("fmt", ["table", "json", "csv"])
def test_enumeration_output_is_byte_identical(fmt):
    first = render_enumeration(classify.enumerate_quadric_splittings(6), fmt)
    second = render_enumeration(classify.enumerate_quadric_splittings(6), fmt)
    assert first == second


@pytest.mark.parametrize("fmt", ["table", "json", "csv"])
def test_verification_output_is_byte_identical(fmt):
    assert render_verification(verify_fixture("quadrics"), fmt) == \
        render_verification(verify_fixture("quadrics"), fmt)
