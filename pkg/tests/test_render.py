"""Tests for src/render.py — text and JSON reports."""

import json
from pathlib import Path

import jsonschema
import pytest

from dsl.execute import Report, ReportRow
from render import render_json, render_text, write_output

WORKSHEETS = Path(__file__).resolve().parent.parent / "worksheets"


@pytest.fixture
def report():
    r = Report("degree a;\nverify associativity a b c;")
    r.results.append(ReportRow("degree a", "pass", "2"))
    r.results.append(ReportRow("verify associativity a b c", "unverified"))
    r.flag("verify associativity a b c: no closure for a two-dimensional source")
    return r


class TestRenderText:
    def test_rows_and_marks(self, report):
        text = render_text(report)
        assert "> degree a;" in text
        assert "  ✓ degree a: 2" in text
        assert "  ? verify associativity a b c\n" in text
        assert "1 passed, 0 failed, 1 unverified" in text

    def test_flags_listed(self, report):
        text = render_text(report)
        assert "Flags:" in text
        assert "  - verify associativity a b c: no closure" in text

    def test_failures_marked(self):
        r = Report("validate c;")
        r.results.append(ReportRow("c component 1: finite over X", "fail"))
        text = render_text(r)
        assert "  ✗ c component 1: finite over X" in text
        assert "Flags:" not in text


class TestRenderJson:
    def test_shape(self, report):
        data = json.loads(render_json(report))
        assert list(data) == ["command", "results", "flags"]
        assert data["results"][1] == {"label": "verify associativity a b c",
                                      "status": "unverified", "value": None}

    def test_matches_golden(self, run_sheet):
        text = (WORKSHEETS / "sqrt2.cor").read_text(encoding="utf-8")
        golden = (WORKSHEETS / "sqrt2.golden.json").read_text(encoding="utf-8")
        assert render_json(run_sheet(text)) == golden

    def test_bad_status_rejected(self):
        r = Report("degree a;")
        r.results.append(ReportRow("degree a", "maybe", "2"))
        with pytest.raises(jsonschema.ValidationError):
            render_json(r)


class TestWriteOutput:
    def test_creates_parent_directories(self, tmp_path):
        path = tmp_path / "out" / "report.json"
        write_output("{}\n", path)
        assert path.read_text(encoding="utf-8") == "{}\n"
