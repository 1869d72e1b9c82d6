"""Shared data models: output and fiber enums, verification reports."""

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any


class OutputFormat(StrEnum):
    """Rendering mode of CLI results."""

    TEXT = "text"
    JSON = "json"


class FiberKind(StrEnum):
    """Kodaira type of a singular fiber of the universal surface over X_1(p)."""

    I1 = "I1"
    IP = "Ip"


@dataclass(frozen=True)
class Check:
    """Outcome of one verified identity."""

    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    """Accumulated checks of a verification suite.

    ``params`` holds the inputs that identify the run (p, m, k, ...), so a report
    can be rendered or logged without its caller.
    """

    name: str
    params: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, passed, detail))
        return passed

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def count(self) -> int:
        return len(self.checks)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.count - len(self.failures)}/{self.count} checks)"
