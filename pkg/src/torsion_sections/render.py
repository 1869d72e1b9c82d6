"""Deterministic JSON and aligned plain-text rendering of results."""

import json
from collections.abc import Sequence
from typing import Any

from torsion_sections.data import SuiteReport


def to_json(data: Any) -> str:
    """Byte-stable JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def text_table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Columns left-aligned to their widest cell, separated by two spaces."""
    cells = [[str(h) for h in headers], *[[str(c) for c in row] for row in rows]]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = [
        "  ".join(c.ljust(w) for c, w in zip(row, widths, strict=True)).rstrip() for row in cells
    ]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def report_payload(report: SuiteReport) -> dict[str, Any]:
    return {
        "suite": report.name,
        "params": report.params,
        "passed": report.passed,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks
        ],
    }


def report_text(report: SuiteReport, *, verbose: bool = False) -> str:
    """Summary line, followed by every check when ``verbose`` and by failures always."""
    lines = [report.summary()]
    shown = report.checks if verbose else report.failures
    lines.extend(
        f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else "")
        for c in shown
    )
    return "\n".join(lines) + "\n"
