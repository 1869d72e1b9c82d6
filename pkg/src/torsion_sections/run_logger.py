"""Run logger recording CLI invocations and their checks to JSON files."""

import uuid
from datetime import UTC, datetime
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from torsion_sections.data import SuiteReport


def _plain(value: Any) -> Any:
    """Keep JSON scalars, render everything else (paths, enums, labels) as text."""
    if value is None or isinstance(value, bool | int | float | str):
        return value
    return str(value)


class CheckRecord(BaseModel):
    """Record of a single verified identity."""

    suite: str
    name: str
    passed: bool
    detail: str = ""


class SuiteRecord(BaseModel):
    """Record of one verification suite execution."""

    suite: str
    params: dict[str, Any] = {}
    passed: bool
    check_count: int = 0
    timestamp: str = ""
    duration_seconds: float = 0.0


class RunRecord(BaseModel):
    """Record of a complete CLI run."""

    run_id: str
    command: str
    params: dict[str, Any]
    started_at: str
    completed_at: str | None = None
    suites: list[SuiteRecord] = []
    checks: list[CheckRecord] = []
    passed: bool | None = None
    exit_code: int | None = None


class RunLogger:
    """Accumulates suite records and writes a JSON log file per run.

    When ``enabled=False``, all methods are no-ops.

    Args:
        log_dir: Directory to write JSON log files.
        enabled: If False, all methods become no-ops.
    """

    def __init__(self, log_dir: Path, *, enabled: bool = True) -> None:
        self._log_dir = log_dir
        self._enabled = enabled
        self._record: RunRecord | None = None
        self._last_log_path: Path | None = None

    @property
    def enabled(self) -> bool:
        """Whether logging is active."""
        return self._enabled

    @property
    def last_log_path(self) -> Path | None:
        """Path to the last written log file, or None."""
        return self._last_log_path

    def start_run(self, command: str, params: dict[str, Any]) -> None:
        """Initialize a new run record.

        Args:
            command: CLI subcommand (e.g. "equidist", "weil").
            params: The parsed command parameters.
        """
        if not self._enabled:
            return

        self._record = RunRecord(
            run_id=str(uuid.uuid4()),
            command=command,
            params={k: _plain(v) for k, v in params.items()},
            started_at=datetime.now(tz=UTC).isoformat(),
        )

    def log_report(self, report: SuiteReport, duration_seconds: float) -> None:
        """Append a suite and all of its checks to the current run."""
        if not self._enabled or self._record is None:
            return

        self._record.suites.append(
            SuiteRecord(
                suite=report.name,
                params={k: str(v) for k, v in report.params.items()},
                passed=report.passed,
                check_count=report.count,
                timestamp=datetime.now(tz=UTC).isoformat(),
                duration_seconds=round(duration_seconds, 4),
            )
        )
        self._record.checks.extend(
            CheckRecord(suite=report.name, name=c.name, passed=c.passed, detail=c.detail)
            for c in report.checks
        )

    def finish_run(self, exit_code: int) -> Path | None:
        """Write the run record to a JSON file.

        Args:
            exit_code: The process exit code the CLI is about to return.

        Returns:
            Path to the written JSON file, or None if logging is disabled.
        """
        if not self._enabled or self._record is None:
            return None

        self._record.completed_at = datetime.now(tz=UTC).isoformat()
        self._record.exit_code = exit_code
        self._record.passed = all(s.passed for s in self._record.suites)

        self._log_dir.mkdir(parents=True, exist_ok=True)

        # run_2026-02-12T14-30-00_weil_1a2b3c4d.json
        ts = self._record.started_at.replace(":", "-")
        ts = ts.split(".")[0].split("+")[0]
        filename = f"run_{ts}_{self._record.command}_{self._record.run_id[:8]}.json"
        filepath = self._log_dir / filename

        filepath.write_text(self._record.model_dump_json(indent=2))
        self._last_log_path = filepath
        return filepath
