"""Tests for RunLogger and its records."""

import json
from pathlib import Path

from torsion_sections.data import SuiteReport
from torsion_sections.run_logger import RunLogger, _plain


def _report(passed: bool = True) -> SuiteReport:
    report = SuiteReport("equidistribution", {"p": 5, "alpha": 1})
    report.add("M_0 closed form", True, "1/6 vs 1/6")
    report.add("M_1 closed form", passed, "5/12 vs 5/12")
    return report


# -- _plain tests --


def test_plain_keeps_json_scalars() -> None:
    assert _plain(None) is None
    assert _plain(42) == 42
    assert _plain("five") == "five"
    assert _plain(True) is True


def test_plain_stringifies_everything_else() -> None:
    assert _plain(Path("/some/path")) == "/some/path"
    assert _plain((1, 2)) == "(1, 2)"


# -- RunLogger disabled tests --


def test_run_logger_disabled_is_noop(tmp_path: Path) -> None:
    logger = RunLogger(log_dir=tmp_path, enabled=False)
    assert not logger.enabled

    logger.start_run("equidist", {"p": 5})
    logger.log_report(_report(), 0.5)
    result = logger.finish_run(0)

    assert result is None
    assert logger.last_log_path is None
    assert list(tmp_path.iterdir()) == []


def test_finish_without_start_writes_nothing(tmp_path: Path) -> None:
    logger = RunLogger(log_dir=tmp_path)
    assert logger.finish_run(0) is None


# -- RunLogger enabled tests --


def test_run_logger_writes_record(tmp_path: Path) -> None:
    logger = RunLogger(log_dir=tmp_path / "logs")
    logger.start_run("equidist", {"p": 5, "alpha": 1, "out": Path("x.json")})
    logger.log_report(_report(), 0.123456)
    path = logger.finish_run(0)

    assert path is not None
    assert path.exists()
    assert logger.last_log_path == path
    assert path.name.startswith("run_")
    assert "_equidist_" in path.name

    data = json.loads(path.read_text())
    assert data["command"] == "equidist"
    assert data["params"] == {"p": 5, "alpha": 1, "out": "x.json"}
    assert data["exit_code"] == 0
    assert data["passed"] is True
    assert data["completed_at"] is not None
    assert len(data["suites"]) == 1
    assert data["suites"][0]["check_count"] == 2
    assert data["suites"][0]["duration_seconds"] == 0.1235
    assert [c["name"] for c in data["checks"]] == ["M_0 closed form", "M_1 closed form"]


def test_run_logger_records_failures(tmp_path: Path) -> None:
    logger = RunLogger(log_dir=tmp_path)
    logger.start_run("verify", {})
    logger.log_report(_report(), 0.1)
    logger.log_report(_report(passed=False), 0.1)
    path = logger.finish_run(3)

    assert path is not None
    data = json.loads(path.read_text())
    assert data["passed"] is False
    assert data["exit_code"] == 3
    assert [s["passed"] for s in data["suites"]] == [True, False]
    assert data["checks"][3]["passed"] is False
