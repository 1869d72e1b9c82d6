"""Data models for torsion-sections."""

from torsion_sections.data.models import Check, FiberKind, OutputFormat, SuiteReport

__all__ = [
    "Check",
    "FiberKind",
    "OutputFormat",
    "SuiteReport",
]
