"""Report envelopes and renderings."""

from __future__ import annotations

import json

from klein_sieve import __version__
from klein_sieve.lattice.enumerate import enumerate_lattice
from klein_sieve.models.certificates import CheckResult
from klein_sieve.models.config import OutputFormat
from klein_sieve.report import (
    SCHEMA_VERSION,
    check_report,
    config_section,
    enumeration_report,
    write_report,
)

from tests.conftest import make_test_config


def test_config_section_drops_volatile_fields():
    section = config_section(make_test_config(workers=4, output_path="/tmp/x.json"))
    for key in ("workers", "chunk_size", "log_level", "output_path"):
        assert key not in section
    assert section["prime"] == 5
    assert section["output_format"] == "json"


def test_envelope_fields():
    report = enumeration_report(5, 4, enumerate_lattice(5, 4), expected=4)
    data = json.loads(report.render(OutputFormat.JSON, make_test_config()))
    assert data["schema_version"] == SCHEMA_VERSION
    assert data["engine_version"] == __version__
    assert data["passed"] is True
    assert data["result"]["vectors"][0].count(",") == 2


def test_enumeration_mismatch_fails():
    report = enumeration_report(5, 4, enumerate_lattice(5, 4), expected=5)
    assert not report.passed
    assert "expected 5" in report.render(OutputFormat.TEXT, make_test_config())


def test_check_report_csv():
    results = [CheckResult("a", True), CheckResult("b", False, "off by one", evidence_only=True)]
    text = check_report("demo", results).render(OutputFormat.CSV, make_test_config())
    assert text.splitlines() == [
        "name,passed,detail,evidence_only",
        "a,True,,False",
        "b,False,off by one,True",
    ]


def test_write_report(tmp_path):
    target = tmp_path / "nested" / "r.txt"
    assert write_report("hello\n", target)
    assert target.read_text() == "hello\n"
    assert not write_report("hello\n", None)
